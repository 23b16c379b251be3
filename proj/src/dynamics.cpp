#include "hebnet/dynamics.hpp"

#include <string>

namespace hebnet {

namespace {

void check_state(const Topology& topo, const SystemState& s, const char* who) {
    if (s.y.size() != topo.neuron_count() || s.w.size() != topo.edge_count())
        throw DimensionMismatch(std::string(who) + ": state is (" +
                                std::to_string(s.y.size()) + ", " +
                                std::to_string(s.w.size()) + ") for a network with n=" +
                                std::to_string(topo.neuron_count()) + ", m=" +
                                std::to_string(topo.edge_count()));
}

} // namespace

SystemState vector_field(const Topology& topo, const ModelSpec& spec,
                         const SystemState& state, double t) {
    return vector_field_delayed(topo, spec, state, t, state.y);
}

SystemState vector_field_delayed(const Topology& topo, const ModelSpec& spec,
                                 const SystemState& state, double t,
                                 const Eigen::VectorXd& y_activation) {
    check_state(topo, state, "vector_field");
    if (y_activation.size() != topo.neuron_count())
        throw DimensionMismatch("vector_field: activation state has wrong length");
    spec.validate(topo);

    const int m = topo.edge_count();
    SystemState d;

    const Eigen::VectorXd u = spec.u.eval(t);
    if (is_hopfield(spec.model)) {
        d.y = -spec.c_n * state.y +
              topo.apply_weighted(state.w, spec.act_neural.value(y_activation)) + u;
    } else {
        const Eigen::VectorXd z = topo.apply_weighted(state.w, y_activation) + u;
        d.y = -spec.c_n * state.y + spec.act_neural.value(z);
    }

    const Eigen::VectorXd phi = spec.act_synaptic.value(y_activation);
    const Eigen::VectorXd phi_pre = topo.gather_pre(phi);
    const Eigen::VectorXd phi_post = topo.gather_post(phi);
    const Eigen::VectorXd ubar = spec.ubar.eval(t);
    d.w.resize(m);
    for (int e = 0; e < m; ++e) {
        const double decay = spec.c_s + spec.c_o * phi_post[e] * phi_post[e];
        d.w[e] = topo.coefficients()[e] * phi_pre[e] * phi_post[e] - decay * state.w[e] +
                 ubar[e];
    }
    return d;
}

Eigen::MatrixXd broadcast_edge_stimulus(const Topology& topo, const Stimulus& ubar,
                                        double t) {
    if (ubar.channels() != topo.edge_count())
        throw DimensionMismatch("broadcast_edge_stimulus: " +
                                std::to_string(ubar.channels()) + " channels for " +
                                std::to_string(topo.edge_count()) + " edges");
    Eigen::MatrixXd U = Eigen::MatrixXd::Zero(topo.neuron_count(), topo.neuron_count());
    for (int e = 0; e < topo.edge_count(); ++e) {
        const Edge& ed = topo.edges()[static_cast<size_t>(e)];
        U(ed.post, ed.pre) = ubar.value(e, t);
    }
    return U;
}

DenseState dense_vector_field(const ModelSpec& spec, const Eigen::MatrixXd& H,
                              const Eigen::MatrixXd& Ubar, const DenseState& state,
                              double t) {
    const Eigen::Index n = state.y.size();
    if (H.rows() != n || H.cols() != n || Ubar.rows() != n || Ubar.cols() != n ||
        state.W.rows() != n || state.W.cols() != n)
        throw DimensionMismatch("dense_vector_field: H, Ubar and W must be n-by-n");

    DenseState d;
    const Eigen::VectorXd u = spec.u.eval(t);
    if (u.size() != n) throw DimensionMismatch("dense_vector_field: u channel count");
    if (is_hopfield(spec.model)) {
        d.y = -spec.c_n * state.y + state.W * spec.act_neural.value(state.y) + u;
    } else {
        const Eigen::VectorXd z = state.W * state.y + u;
        d.y = -spec.c_n * state.y + spec.act_neural.value(z);
    }

    const Eigen::VectorXd phi = spec.act_synaptic.value(state.y);
    d.W.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double decay = spec.c_s + spec.c_o * phi[i] * phi[i];
        // the Hebbian product is grouped so a symmetric H yields a bitwise
        // symmetric derivative
        for (Eigen::Index j = 0; j < n; ++j)
            d.W(i, j) = H(i, j) * (phi[i] * phi[j]) - decay * state.W(i, j) + Ubar(i, j);
    }
    return d;
}

Eigen::MatrixXd JacobianBlocks::full() const {
    const Eigen::Index n = nn.rows();
    const Eigen::Index m = ss.rows();
    Eigen::MatrixXd J(n + m, n + m);
    J.topLeftCorner(n, n) = nn;
    J.topRightCorner(n, m) = ns;
    J.bottomLeftCorner(m, n) = sn;
    J.bottomRightCorner(m, m) = ss;
    return J;
}

JacobianBlocks jacobian(const Topology& topo, const ModelSpec& spec,
                        const SystemState& state, double t) {
    check_state(topo, state, "jacobian");
    spec.validate(topo);

    const int n = topo.neuron_count();
    const int m = topo.edge_count();
    const auto& edges = topo.edges();
    const Eigen::VectorXd& h = topo.coefficients();

    JacobianBlocks J;
    J.nn = -spec.c_n * Eigen::MatrixXd::Identity(n, n);
    J.ns = Eigen::MatrixXd::Zero(n, m);
    J.sn = Eigen::MatrixXd::Zero(m, n);
    J.ss = Eigen::MatrixXd::Zero(m, m);

    if (is_hopfield(spec.model)) {
        const Eigen::VectorXd phi_n = spec.act_neural.value(state.y);
        const Eigen::VectorXd dphi_n = spec.act_neural.slope(state.y);
        for (int e = 0; e < m; ++e) {
            const Edge& ed = edges[static_cast<size_t>(e)];
            J.nn(ed.post, ed.pre) += state.w[e] * dphi_n[ed.pre];
            J.ns(ed.post, e) = phi_n[ed.pre];
        }
    } else {
        // pre-activation input z and its slope govern the neural rows
        const Eigen::VectorXd z = topo.apply_weighted(state.w, state.y) + spec.u.eval(t);
        const Eigen::VectorXd dphi_z = spec.act_neural.slope(z);
        for (int e = 0; e < m; ++e) {
            const Edge& ed = edges[static_cast<size_t>(e)];
            J.nn(ed.post, ed.pre) += dphi_z[ed.post] * state.w[e];
            J.ns(ed.post, e) = dphi_z[ed.post] * state.y[ed.pre];
        }
    }

    const Eigen::VectorXd phi_s = spec.act_synaptic.value(state.y);
    const Eigen::VectorXd dphi_s = spec.act_synaptic.slope(state.y);
    for (int e = 0; e < m; ++e) {
        const Edge& ed = edges[static_cast<size_t>(e)];
        J.sn(e, ed.pre) += h[e] * phi_s[ed.post] * dphi_s[ed.pre];
        J.sn(e, ed.post) += h[e] * phi_s[ed.pre] * dphi_s[ed.post];
        J.sn(e, ed.post) += -2.0 * spec.c_o * state.w[e] * phi_s[ed.post] * dphi_s[ed.post];
        J.ss(e, e) = -spec.c_s - spec.c_o * phi_s[ed.post] * phi_s[ed.post];
    }
    return J;
}

} // namespace hebnet
