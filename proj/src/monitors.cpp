#include "hebnet/monitors.hpp"

#include <cmath>

namespace hebnet {

namespace {
constexpr double kSignTol = 1e-9;

// envelope (|v0| - vmax) e^{-c t} + vmax
double envelope(double v0_abs, double vmax, double c, double t) {
    return (v0_abs - vmax) * std::exp(-c * t) + vmax;
}

Eigen::VectorXd state_at(const Trajectory& traj, double t, bool synaptic) {
    // linear interpolation between grid points; t must be inside the span
    const double pos = t / traj.dt;
    const auto lo = static_cast<size_t>(std::floor(pos));
    const size_t hi = std::min(lo + 1, traj.states.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    const Eigen::VectorXd& a = synaptic ? traj.states[lo].w : traj.states[lo].y;
    const Eigen::VectorXd& b = synaptic ? traj.states[hi].w : traj.states[hi].y;
    return a + frac * (b - a);
}
} // namespace

InvarianceReport check_invariance(const Trajectory& traj, const Bounds& bounds) {
    InvarianceReport report;
    if (traj.states.empty()) return report;
    const Eigen::VectorXd y0_abs = traj.states.front().y.cwiseAbs();
    const Eigen::VectorXd w0_abs = traj.states.front().w.cwiseAbs();
    const double y_max = bounds.neural_bound();

    for (size_t k = 0; k < traj.times.size(); ++k) {
        const double t = traj.times[k];
        const SystemState& s = traj.states[k];
        for (Eigen::Index i = 0; i < s.y.size(); ++i) {
            const double env = envelope(y0_abs[i], y_max, bounds.c_n, t);
            const double margin = std::abs(s.y[i]) - env;
            if (margin > 1e-8 * std::max(1.0, env))
                report.violations.push_back({t, static_cast<int>(i), false, margin});
        }
        for (Eigen::Index e = 0; e < s.w.size(); ++e) {
            const double env = envelope(w0_abs[e], bounds.w_max, bounds.c_s, t);
            const double margin = std::abs(s.w[e]) - env;
            if (margin > 1e-8 * std::max(1.0, env))
                report.violations.push_back({t, static_cast<int>(e), true, margin});
        }
    }
    return report;
}

DaleReport check_dale(const Trajectory& traj, const Topology& topo, const Stimulus& ubar) {
    if (ubar.channels() != topo.edge_count())
        throw DimensionMismatch("check_dale: ubar channel count does not match the topology");
    DaleReport report;
    if (traj.states.empty()) return report;
    const Eigen::VectorXd& w0 = traj.states.front().w;

    for (int e = 0; e < topo.edge_count(); ++e) {
        DaleEdgeReport er;
        er.edge = e;
        if (!ubar.channel_is_zero(e)) {
            er.verdict = DaleVerdict::NotApplicable;
            er.reason = "non-zero synaptic stimulus";
            report.edges.push_back(er);
            continue;
        }
        const double h = topo.coefficients()[e];
        const int want = h > 0.0 ? +1 : -1; // excitatory edges stay >= 0, inhibitory <= 0
        if ((want > 0 && w0[e] < 0.0) || (want < 0 && w0[e] > 0.0)) {
            er.verdict = DaleVerdict::NotApplicable;
            er.reason = "initial weight sign does not match the rule";
            report.edges.push_back(er);
            continue;
        }
        er.verdict = DaleVerdict::Preserved;
        for (size_t k = 0; k < traj.times.size(); ++k) {
            const double w = traj.states[k].w[e];
            if ((want > 0 && w < -kSignTol) || (want < 0 && w > kSignTol)) {
                er.verdict = DaleVerdict::Violated;
                er.first_violation_t = traj.times[k];
                break;
            }
        }
        report.edges.push_back(er);
    }
    return report;
}

SkewDecayReport check_skew_decay(const DenseTrajectory& traj, const ModelSpec& spec) {
    SkewDecayReport report;
    if ((traj.H - traj.H.transpose()).cwiseAbs().maxCoeff() > 0.0)
        throw NonSymmetricH("check_skew_decay: H is not symmetric");
    if (is_oja(spec.model) && spec.c_o > 0.0) {
        report.applicable = false;
        report.reason = "Oja drag (c_o > 0) breaks the symmetric decay argument";
        return report;
    }
    if (traj.Ubar.size() != 0 && traj.Ubar.cwiseAbs().maxCoeff() > 0.0) {
        report.applicable = false;
        report.reason = "non-zero synaptic stimulus";
        return report;
    }
    report.applicable = true;

    auto skew_norm = [](const Eigen::MatrixXd& W) {
        return induced_inf_norm(0.5 * (W - W.transpose()));
    };
    const double s0 = skew_norm(traj.states.front().W);
    if (s0 == 0.0) {
        report.exact_zero_branch = true;
        for (const DenseState& s : traj.states)
            report.max_abs_skew = std::max(report.max_abs_skew, skew_norm(s.W));
        return report;
    }
    for (size_t k = 0; k < traj.times.size(); ++k) {
        const double expected = s0 * std::exp(-spec.c_s * traj.times[k]);
        const double actual = skew_norm(traj.states[k].W);
        report.max_rel_error =
            std::max(report.max_rel_error, std::abs(actual / expected - 1.0));
    }
    return report;
}

EntrainmentReport check_entrainment(const Trajectory& traj, double period,
                                    double transient, int k, double tolerance) {
    if (!(period > 0.0)) throw InvalidParams("check_entrainment: period must be positive");
    if (k < 1) throw InvalidParams("check_entrainment: need at least one period");
    const double t_last = traj.times.back();
    const double needed = transient + (k + 1) * period;
    if (t_last < needed)
        throw TrajectoryTooShort("check_entrainment: trajectory covers t <= " +
                                 std::to_string(t_last) + " but needs " +
                                 std::to_string(needed));

    EntrainmentReport report;
    report.period = period;
    report.tolerance = tolerance;
    const double t_begin = std::max(transient, t_last - (k + 1) * period);
    report.compared = {t_begin, t_last - period};

    double residual = 0.0;
    for (size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        if (t < t_begin) continue;
        if (t + period > t_last) break;
        const Eigen::VectorXd dy =
            state_at(traj, t + period, false) - traj.states[i].y;
        residual = std::max(residual, dy.size() ? dy.cwiseAbs().maxCoeff() : 0.0);
        const Eigen::VectorXd dw = state_at(traj, t + period, true) - traj.states[i].w;
        residual = std::max(residual, dw.size() ? dw.cwiseAbs().maxCoeff() : 0.0);
    }
    report.residual = residual;
    report.entrained = residual < tolerance;
    return report;
}

} // namespace hebnet
