#include "hebnet/stimulus.hpp"

#include <cmath>
#include <string>

namespace hebnet {

double Signal::value(double t) const {
    switch (kind) {
        case Kind::Zero: return 0.0;
        case Kind::Constant: return amplitude;
        case Kind::Sinusoid: return amplitude * std::sin(omega * t + phase);
        case Kind::TanhRamp: return amplitude * std::tanh(t);
    }
    return 0.0;
}

double Signal::sup_abs() const {
    return kind == Kind::Zero ? 0.0 : std::abs(amplitude);
}

bool Signal::is_zero() const {
    return kind == Kind::Zero || amplitude == 0.0;
}

void Stimulus::set(int channel, Signal s) {
    if (channel < 0 || channel >= channels())
        throw IndexOutOfRange("stimulus channel " + std::to_string(channel + 1) +
                              " outside 1.." + std::to_string(channels()));
    signals_[static_cast<size_t>(channel)] = s;
}

const Signal& Stimulus::signal(int channel) const {
    if (channel < 0 || channel >= channels())
        throw IndexOutOfRange("stimulus channel " + std::to_string(channel + 1) +
                              " outside 1.." + std::to_string(channels()));
    return signals_[static_cast<size_t>(channel)];
}

Eigen::VectorXd Stimulus::eval(double t) const {
    Eigen::VectorXd out(channels());
    for (int i = 0; i < channels(); ++i) out[i] = signals_[static_cast<size_t>(i)].value(t);
    return out;
}

double Stimulus::sup_abs() const {
    double m = 0.0;
    for (const Signal& s : signals_) m = std::max(m, s.sup_abs());
    return m;
}

} // namespace hebnet
