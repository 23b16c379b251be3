#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hebnet/dynamics.hpp"
#include "hebnet/model.hpp"
#include "hebnet/topology.hpp"

namespace hebnet {

/// Fixed-step trajectory on the uniform grid t_k = k * dt, k = 0..N with
/// N = ceil(t_end / dt).
struct Trajectory {
    std::vector<double> times;
    std::vector<SystemState> states;
    double dt = 0.0;
    double tau = 0.0; ///< effective activation delay actually used
    std::vector<std::string> notes;

    int steps() const { return static_cast<int>(times.size()) - 1; }
};

/// Classical fixed-step RK4 over vector_field. dt must satisfy the stability
/// guard dt <= 0.2 / max(c_n, c_s); throws UnstableStep otherwise and
/// NonFiniteState when the state diverges.
Trajectory integrate(const Topology& topo, const ModelSpec& spec,
                     const SystemState& state0, double t_end, double dt);

/// Same integrator, but every activation argument reads the neural state at
/// t - tau from the trajectory history (linear interpolation at the RK4
/// stage times, constant pre-history equal to state0 on [-tau, 0]). tau is
/// rounded to the nearest multiple of dt, with a note recorded when rounding
/// changes it; tau = 0 reproduces integrate() bitwise.
Trajectory integrate_delayed(const Topology& topo, const ModelSpec& spec,
                             const SystemState& state0, double t_end, double dt,
                             double tau);

/// CSV with header t,y_1..y_n,w_1..w_m and one row per grid point.
void write_csv(const Trajectory& traj, std::ostream& out);

/// Full-dimensional trajectory used by the dense experiments; carries the
/// coupling pattern and the (constant) synaptic stimulus it was run with.
struct DenseTrajectory {
    std::vector<double> times;
    std::vector<DenseState> states;
    double dt = 0.0;
    Eigen::MatrixXd H;
    Eigen::MatrixXd Ubar;
};

/// RK4 over dense_vector_field with a constant synaptic stimulus matrix.
DenseTrajectory integrate_dense(const ModelSpec& spec, const Eigen::MatrixXd& H,
                                const Eigen::MatrixXd& Ubar, const DenseState& state0,
                                double t_end, double dt);

} // namespace hebnet
