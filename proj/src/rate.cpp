#include "hebnet/rate.hpp"

#include <cmath>
#include <vector>

namespace hebnet {

namespace {
constexpr double kDistanceFloor = 1e-10;
constexpr double kDefaultTransient = 1.0;

double block_norm_inf(const Eigen::VectorXd& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}
} // namespace

double composite_distance(const SystemState& a, const SystemState& b,
                          const Eigen::Vector2d& eta, double p) {
    if (a.y.size() != b.y.size() || a.w.size() != b.w.size())
        throw DimensionMismatch("composite_distance: states have different shapes");
    if (!(eta[0] > 0.0) || !(eta[1] > 0.0))
        throw NonPositiveWeight("composite_distance: eta must be positive");
    const double dy = eta[0] * block_norm_inf(a.y - b.y);
    const double dw = eta[1] * block_norm_inf(a.w - b.w);
    if (std::isinf(p)) return std::max(dy, dw);
    if (p == 1.0) return dy + dw;
    throw UnsupportedExponent("composite_distance: only p = 1 and p = inf are supported");
}

RateEstimate empirical_rate(const Trajectory& a, const Trajectory& b,
                            const Eigen::Vector2d& eta, double p,
                            std::optional<Window> window) {
    if (a.times.size() != b.times.size() || a.dt != b.dt)
        throw GridMismatch("empirical_rate: trajectories use different grids");
    for (size_t k = 0; k < a.times.size(); ++k)
        if (a.times[k] != b.times[k])
            throw GridMismatch("empirical_rate: trajectories use different grids");
    if (a.times.size() < 2) throw DegenerateWindow("empirical_rate: trajectory too short");

    std::vector<double> dist(a.times.size());
    for (size_t k = 0; k < a.times.size(); ++k)
        dist[k] = composite_distance(a.states[k], b.states[k], eta, p);

    const double t_last = a.times.back();
    double t0 = window ? window->t_start : std::min(kDefaultTransient, 0.5 * t_last);
    double t1 = window ? window->t_end : t_last;
    if (!(t0 < t1) || t0 < 0.0 || t1 > t_last + 1e-12)
        throw DegenerateWindow("empirical_rate: window outside the trajectory span");

    RateEstimate est;
    est.norm = (std::isinf(p) ? std::string("linf") : std::string("l1")) + "-composite[" +
               std::to_string(eta[0]) + "," + std::to_string(eta[1]) + "]";

    // collect usable samples; without an explicit window, stop at the first
    // crossing below the floor so the flat tail does not bias the fit
    std::vector<double> ts, logs;
    bool hit_zero = false;
    for (size_t k = 0; k < a.times.size(); ++k) {
        const double t = a.times[k];
        if (t < t0 - 1e-12) continue;
        if (t > t1 + 1e-12) break;
        if (dist[k] <= 0.0) {
            hit_zero = true;
            break;
        }
        if (!window && dist[k] < kDistanceFloor && !ts.empty()) break;
        ts.push_back(t);
        logs.push_back(std::log(dist[k]));
    }

    if (ts.empty() && hit_zero) {
        est.rate = kInf;
        est.saturated = true;
        est.window = {t0, t1};
        return est;
    }
    if (ts.size() < 2) {
        if (hit_zero) {
            est.rate = kInf;
            est.saturated = true;
            est.window = {t0, t1};
            est.points = static_cast<int>(ts.size());
            return est;
        }
        throw DegenerateWindow("empirical_rate: fewer than two samples in the window");
    }

    // least squares slope of log(d) against t
    const size_t n = ts.size();
    double mt = 0.0, ml = 0.0;
    for (size_t k = 0; k < n; ++k) {
        mt += ts[k];
        ml += logs[k];
    }
    mt /= static_cast<double>(n);
    ml /= static_cast<double>(n);
    double stt = 0.0, stl = 0.0;
    for (size_t k = 0; k < n; ++k) {
        stt += (ts[k] - mt) * (ts[k] - mt);
        stl += (ts[k] - mt) * (logs[k] - ml);
    }
    if (stt == 0.0) throw DegenerateWindow("empirical_rate: degenerate time samples");
    const double slope = stl / stt;
    const double intercept = ml - slope * mt;
    double ss = 0.0;
    for (size_t k = 0; k < n; ++k) {
        const double r = logs[k] - (slope * ts[k] + intercept);
        ss += r * r;
    }
    est.rate = -slope;
    est.residual = std::sqrt(ss / static_cast<double>(n));
    est.window = {ts.front(), ts.back()};
    est.points = static_cast<int>(n);
    return est;
}

} // namespace hebnet
