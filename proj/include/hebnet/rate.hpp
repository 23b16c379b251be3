#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "hebnet/integrate.hpp"
#include "hebnet/lognorm.hpp"

namespace hebnet {

/// Composite distance || [ ||ya - yb||_inf, ||wa - wb||_inf ] ||_{p,[eta]}
/// between two states; p must be 1 or inf.
double composite_distance(const SystemState& a, const SystemState& b,
                          const Eigen::Vector2d& eta, double p);

struct Window {
    double t_start = 0.0;
    double t_end = 0.0;
};

/// Empirical contraction rate: least-squares slope of log(distance) vs t,
/// negated.
struct RateEstimate {
    double rate = 0.0;
    Window window;
    std::string norm;     ///< descriptor of the composite norm used
    double residual = 0.0; ///< RMS residual of the log-linear fit
    bool saturated = false; ///< distance hit zero; rate reported as +inf
    int points = 0;
};

/// Fits log of the composite distance between two trajectories over the
/// window. By default the window discards t < 1 (transient) and stops at the
/// first crossing of distance below 1e-10 to avoid the floating-point floor.
/// Throws GridMismatch when the trajectories are on different grids and
/// DegenerateWindow when fewer than two usable samples remain.
RateEstimate empirical_rate(const Trajectory& a, const Trajectory& b,
                            const Eigen::Vector2d& eta, double p,
                            std::optional<Window> window = std::nullopt);

} // namespace hebnet
