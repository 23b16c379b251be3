#pragma once

#include <string>
#include <vector>

#include "hebnet/certificate.hpp"
#include "hebnet/integrate.hpp"
#include "hebnet/rate.hpp"

namespace hebnet {

/// One envelope breach: at time t, variable `index` (neural or synaptic)
/// exceeded its decay envelope by `margin`.
struct InvarianceViolation {
    double t = 0.0;
    int index = 0; ///< 0-based into y or w
    bool synaptic = false;
    double margin = 0.0;
};

struct InvarianceReport {
    std::vector<InvarianceViolation> violations;
    bool compliant() const { return violations.empty(); }
};

/// Checks the per-step envelopes
///   |y_i(t)| <= (|y_i(0)| - y_max) e^{-c_n t} + y_max   and the synaptic
/// analogue with c_s and w_max, where y_max is bounds.neural_bound().
/// Valid for any initial condition (the envelopes also express attractivity
/// from outside the box). Report-only.
InvarianceReport check_invariance(const Trajectory& traj, const Bounds& bounds);

enum class DaleVerdict { Preserved, Violated, NotApplicable };

struct DaleEdgeReport {
    int edge = 0; ///< 0-based
    DaleVerdict verdict = DaleVerdict::NotApplicable;
    double first_violation_t = 0.0;
    std::string reason; ///< set when NotApplicable
};

struct DaleReport {
    std::vector<DaleEdgeReport> edges;
    bool all_preserved() const {
        for (const auto& e : edges)
            if (e.verdict == DaleVerdict::Violated) return false;
        return true;
    }
    int applicable_count() const {
        int c = 0;
        for (const auto& e : edges)
            if (e.verdict != DaleVerdict::NotApplicable) ++c;
        return c;
    }
};

/// Sign preservation per edge: h_e > 0 with w_e(0) >= 0 must keep w_e >= 0,
/// h_e < 0 with w_e(0) <= 0 must keep w_e <= 0. Only edges with identically
/// zero synaptic stimulus qualify; the rest (and edges whose initial sign
/// does not match) are marked NotApplicable. Tolerance -1e-9 absorbs
/// integrator jitter.
DaleReport check_dale(const Trajectory& traj, const Topology& topo, const Stimulus& ubar);

struct SkewDecayReport {
    bool applicable = false;
    std::string reason;          ///< set when not applicable
    bool exact_zero_branch = false;
    double max_abs_skew = 0.0;   ///< max_t ||W_A(t)||_inf (zero branch)
    double max_rel_error = 0.0;  ///< max_t | ||W_A(t)|| / (e^{-c_s t} ||W_A(0)||) - 1 |
};

/// For a dense run with symmetric H and zero synaptic stimulus, the
/// skew-symmetric part obeys ||W_A(t)|| = e^{-c_s t} ||W_A(0)||; with
/// W_A(0) = 0 it stays identically zero. Not applicable to the Oja models
/// (c_o > 0 breaks the symmetry argument). Throws NonSymmetricH.
SkewDecayReport check_skew_decay(const DenseTrajectory& traj, const ModelSpec& spec);

struct EntrainmentReport {
    double period = 0.0;
    double residual = 0.0; ///< max over sampled phases of ||z(t+T) - z(t)||_inf
    bool entrained = false;
    double tolerance = 0.0;
    Window compared;
};

/// Compares the state at t and t + T over the final k periods, after the
/// transient has been discarded. States at off-grid times are linearly
/// interpolated. Throws TrajectoryTooShort when the run does not cover
/// transient + (k+1) periods.
EntrainmentReport check_entrainment(const Trajectory& traj, double period,
                                    double transient, int k = 3, double tolerance = 1e-3);

} // namespace hebnet
