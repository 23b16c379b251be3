#include "hebnet/integrate.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

namespace hebnet {

namespace {

void check_step(double dt, double t_end, double c_n, double c_s) {
    if (!(dt > 0.0)) throw InvalidParams("dt must be positive");
    if (!(t_end >= dt)) throw InvalidParams("t_end must be at least dt");
    const double guard = 0.2 / std::max(c_n, c_s);
    if (dt > guard)
        throw UnstableStep("dt = " + std::to_string(dt) + " exceeds the stability guard " +
                           std::to_string(guard) + " = 0.2 / max(c_n, c_s)");
}

long long step_count(double t_end, double dt) {
    return std::max<long long>(1, static_cast<long long>(std::ceil(t_end / dt - 1e-9)));
}

// Neural state entering the activation functions at a RK4 stage.
// half_index counts half-steps of the delayed lookup time; the pre-history
// (half_index <= 0) is the constant initial state.
Eigen::VectorXd delayed_activation_state(const std::vector<SystemState>& states,
                                         long long half_index) {
    if (half_index <= 0) return states.front().y;
    const long long k = half_index / 2;
    if (half_index % 2 == 0) return states[static_cast<size_t>(k)].y;
    return 0.5 * (states[static_cast<size_t>(k)].y + states[static_cast<size_t>(k + 1)].y);
}

Trajectory integrate_impl(const Topology& topo, const ModelSpec& spec,
                          const SystemState& state0, double t_end, double dt,
                          long long delay_steps, std::vector<std::string> notes) {
    spec.validate(topo);
    check_step(dt, t_end, spec.c_n, spec.c_s);
    if (state0.y.size() != topo.neuron_count() || state0.w.size() != topo.edge_count())
        throw DimensionMismatch("integrate: initial state does not match the topology");
    if (!state0.all_finite()) throw NonFiniteState("integrate: non-finite initial state");

    const long long n_steps = step_count(t_end, dt);
    Trajectory traj;
    traj.dt = dt;
    traj.tau = static_cast<double>(delay_steps) * dt;
    traj.notes = std::move(notes);
    traj.times.reserve(static_cast<size_t>(n_steps) + 1);
    traj.states.reserve(static_cast<size_t>(n_steps) + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(state0);

    // rhs at a stage: stage_half counts half-steps from t = 0, so the
    // delayed activation state lives at stage_half - 2 * delay_steps.
    auto rhs = [&](const SystemState& s, double t, long long stage_half) {
        if (delay_steps == 0) return vector_field_delayed(topo, spec, s, t, s.y);
        const Eigen::VectorXd y_act =
            delayed_activation_state(traj.states, stage_half - 2 * delay_steps);
        return vector_field_delayed(topo, spec, s, t, y_act);
    };

    SystemState s = state0;
    for (long long k = 0; k < n_steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const long long half = 2 * k;

        const SystemState k1 = rhs(s, t, half);
        SystemState mid{s.y + (0.5 * dt) * k1.y, s.w + (0.5 * dt) * k1.w};
        const SystemState k2 = rhs(mid, t + 0.5 * dt, half + 1);
        mid.y = s.y + (0.5 * dt) * k2.y;
        mid.w = s.w + (0.5 * dt) * k2.w;
        const SystemState k3 = rhs(mid, t + 0.5 * dt, half + 1);
        mid.y = s.y + dt * k3.y;
        mid.w = s.w + dt * k3.w;
        const SystemState k4 = rhs(mid, t + dt, half + 2);

        s.y += (dt / 6.0) * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
        s.w += (dt / 6.0) * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w);
        if (!s.all_finite())
            throw NonFiniteState("integrate: state diverged at t = " +
                                 std::to_string(t + dt));
        traj.times.push_back(static_cast<double>(k + 1) * dt);
        traj.states.push_back(s);
    }
    return traj;
}

} // namespace

Trajectory integrate(const Topology& topo, const ModelSpec& spec,
                     const SystemState& state0, double t_end, double dt) {
    return integrate_impl(topo, spec, state0, t_end, dt, 0, {});
}

Trajectory integrate_delayed(const Topology& topo, const ModelSpec& spec,
                             const SystemState& state0, double t_end, double dt,
                             double tau) {
    if (tau < 0.0) throw InvalidParams("tau must be non-negative");
    const long long delay_steps = std::llround(tau / dt);
    std::vector<std::string> notes;
    const double effective = static_cast<double>(delay_steps) * dt;
    if (std::abs(effective - tau) > 1e-12 * std::max(1.0, tau))
        notes.push_back("delay tau = " + std::to_string(tau) +
                        " rounded to nearest step multiple " + std::to_string(effective));
    return integrate_impl(topo, spec, state0, t_end, dt, delay_steps, std::move(notes));
}

void write_csv(const Trajectory& traj, std::ostream& out) {
    if (traj.states.empty()) return;
    const Eigen::Index n = traj.states.front().y.size();
    const Eigen::Index m = traj.states.front().w.size();
    out << "t";
    for (Eigen::Index i = 0; i < n; ++i) out << ",y_" << (i + 1);
    for (Eigen::Index e = 0; e < m; ++e) out << ",w_" << (e + 1);
    out << "\n";
    out << std::setprecision(17);
    for (size_t k = 0; k < traj.times.size(); ++k) {
        out << traj.times[k];
        const SystemState& s = traj.states[k];
        for (Eigen::Index i = 0; i < n; ++i) out << "," << s.y[i];
        for (Eigen::Index e = 0; e < m; ++e) out << "," << s.w[e];
        out << "\n";
    }
}

DenseTrajectory integrate_dense(const ModelSpec& spec, const Eigen::MatrixXd& H,
                                const Eigen::MatrixXd& Ubar, const DenseState& state0,
                                double t_end, double dt) {
    check_step(dt, t_end, spec.c_n, spec.c_s);
    if (!state0.all_finite()) throw NonFiniteState("integrate_dense: non-finite initial state");

    const long long n_steps = step_count(t_end, dt);
    DenseTrajectory traj;
    traj.dt = dt;
    traj.H = H;
    traj.Ubar = Ubar;
    traj.times.reserve(static_cast<size_t>(n_steps) + 1);
    traj.states.reserve(static_cast<size_t>(n_steps) + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(state0);

    DenseState s = state0;
    for (long long k = 0; k < n_steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const DenseState k1 = dense_vector_field(spec, H, Ubar, s, t);
        DenseState mid{s.y + (0.5 * dt) * k1.y, s.W + (0.5 * dt) * k1.W};
        const DenseState k2 = dense_vector_field(spec, H, Ubar, mid, t + 0.5 * dt);
        mid.y = s.y + (0.5 * dt) * k2.y;
        mid.W = s.W + (0.5 * dt) * k2.W;
        const DenseState k3 = dense_vector_field(spec, H, Ubar, mid, t + 0.5 * dt);
        mid.y = s.y + dt * k3.y;
        mid.W = s.W + dt * k3.W;
        const DenseState k4 = dense_vector_field(spec, H, Ubar, mid, t + dt);
        s.y += (dt / 6.0) * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
        s.W += (dt / 6.0) * (k1.W + 2.0 * k2.W + 2.0 * k3.W + k4.W);
        if (!s.all_finite())
            throw NonFiniteState("integrate_dense: state diverged at t = " +
                                 std::to_string(t + dt));
        traj.times.push_back(static_cast<double>(k + 1) * dt);
        traj.states.push_back(s);
    }
    return traj;
}

} // namespace hebnet
