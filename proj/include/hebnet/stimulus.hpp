#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hebnet/errors.hpp"

namespace hebnet {

/// One scalar input signal. The families are chosen so that the supremum of
/// |signal(t)| over t >= 0 is known exactly: |amplitude| for the sinusoid and
/// the tanh ramp, |amplitude| for a constant, 0 for the zero signal.
struct Signal {
    enum class Kind { Zero, Constant, Sinusoid, TanhRamp };

    Kind kind = Kind::Zero;
    double amplitude = 0.0; ///< value for Constant, peak for the others
    double omega = 0.0;     ///< Sinusoid only
    double phase = 0.0;     ///< Sinusoid only

    static Signal zero() { return {}; }
    static Signal constant(double a) { return {Kind::Constant, a, 0.0, 0.0}; }
    static Signal sinusoid(double amplitude, double omega, double phase = 0.0) {
        return {Kind::Sinusoid, amplitude, omega, phase};
    }
    static Signal tanh_ramp(double amplitude) {
        return {Kind::TanhRamp, amplitude, 0.0, 0.0};
    }

    double value(double t) const;
    double sup_abs() const;
    /// True when the signal is identically zero for all t.
    bool is_zero() const;

    friend bool operator==(const Signal&, const Signal&) = default;
};

/// A bank of per-channel signals; channels are neurons (u) or edges (ubar).
class Stimulus {
public:
    Stimulus() = default;
    explicit Stimulus(int channels) : signals_(static_cast<size_t>(channels)) {}

    static Stimulus zero(int channels) { return Stimulus(channels); }

    int channels() const { return static_cast<int>(signals_.size()); }
    void set(int channel, Signal s);
    const Signal& signal(int channel) const;

    double value(int channel, double t) const { return signal(channel).value(t); }
    Eigen::VectorXd eval(double t) const;

    /// max over channels of sup_t |signal(t)|; exact for these families.
    double sup_abs() const;

    bool channel_is_zero(int channel) const { return signal(channel).is_zero(); }

    friend bool operator==(const Stimulus&, const Stimulus&) = default;

private:
    std::vector<Signal> signals_;
};

} // namespace hebnet
