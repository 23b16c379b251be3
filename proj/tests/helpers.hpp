#pragma once

#include <algorithm>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hebnet/certificate.hpp"
#include "hebnet/dynamics.hpp"
#include "hebnet/model.hpp"
#include "hebnet/topology.hpp"

namespace hebnet::testing {

// independent oracle: central finite differences of vector_field in the
// packed (y, w) state
inline Eigen::MatrixXd fd_jacobian(const Topology& topo, const ModelSpec& spec,
                                   const SystemState& state, double t, double h = 1e-5) {
    const int n = topo.neuron_count();
    const int m = topo.edge_count();
    Eigen::MatrixXd J(n + m, n + m);
    for (int j = 0; j < n + m; ++j) {
        SystemState plus = state, minus = state;
        if (j < n) {
            plus.y[j] += h;
            minus.y[j] -= h;
        } else {
            plus.w[j - n] += h;
            minus.w[j - n] -= h;
        }
        const SystemState fp = vector_field(topo, spec, plus, t);
        const SystemState fm = vector_field(topo, spec, minus, t);
        for (int i = 0; i < n; ++i) J(i, j) = (fp.y[i] - fm.y[i]) / (2 * h);
        for (int e = 0; e < m; ++e) J(n + e, j) = (fp.w[e] - fm.w[e]) / (2 * h);
    }
    return J;
}

// Six-neuron feed-forward block: e1..e4 excitatory, e5, e6 inhibitory
// (0-based endpoints; user-facing configs carry the 1-based form).
inline Topology fig1_topology() {
    std::vector<Edge> edges = {{3, 0}, {5, 0}, {2, 1}, {4, 1}, {5, 2}, {4, 3}};
    Eigen::VectorXd h(6);
    h << 1, 1, 1, 1, -1, -1;
    return Topology(6, std::move(edges), std::move(h));
}

// Recurrent variant with three feedback edges; e5..e7 inhibitory.
inline Topology fig3_topology() {
    std::vector<Edge> edges = {{3, 0}, {5, 0}, {2, 1}, {4, 1}, {5, 2},
                               {4, 3}, {0, 4}, {1, 5}, {0, 5}};
    Eigen::VectorXd h(9);
    h << 1, 1, 1, 1, -1, -1, -1, 1, 1;
    return Topology(6, std::move(edges), std::move(h));
}

inline ModelSpec fig1_spec(ModelKind kind = ModelKind::HopfieldHebbian, double c_o = 0.0) {
    ModelSpec spec;
    spec.model = kind;
    spec.c_n = 3.6;
    spec.c_s = 3.2;
    spec.c_o = c_o;
    spec.u = Stimulus::zero(6);
    spec.u.set(0, Signal::sinusoid(20.0, 8.0));
    spec.u.set(1, Signal::sinusoid(15.0, 8.0, std::numbers::pi / 2));
    spec.ubar = Stimulus::zero(6);
    for (int e = 0; e < 4; ++e) spec.ubar.set(e, Signal::constant(1.5));
    return spec;
}

inline Topology random_topology(std::mt19937_64& rng, int max_n = 8, int max_m = 20) {
    std::uniform_int_distribution<int> n_dist(1, max_n);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> m_dist(0, std::min(n * n, max_m));
    const int m = m_dist(rng);
    std::set<std::pair<int, int>> used;
    std::uniform_int_distribution<int> node(0, n - 1);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::vector<Edge> edges;
    std::vector<double> h;
    while (static_cast<int>(edges.size()) < m) {
        const int post = node(rng), pre = node(rng);
        if (!used.insert({post, pre}).second) continue;
        double c = 0.0;
        while (c == 0.0) c = coeff(rng);
        edges.push_back({post, pre});
        h.push_back(c);
    }
    Eigen::VectorXd hv(static_cast<Eigen::Index>(h.size()));
    for (size_t i = 0; i < h.size(); ++i) hv[static_cast<Eigen::Index>(i)] = h[i];
    return Topology(n, std::move(edges), hv);
}

inline bool bitwise_equal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.size() == 0) return true;
    return (a.array() == b.array()).all();
}

// random topology with exactly n neurons and m edges
inline Topology random_topology_nm(std::mt19937_64& rng, int n, int m) {
    std::set<std::pair<int, int>> used;
    std::uniform_int_distribution<int> node(0, n - 1);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::vector<Edge> edges;
    std::vector<double> h;
    while (static_cast<int>(edges.size()) < m) {
        const int post = node(rng), pre = node(rng);
        if (!used.insert({post, pre}).second) continue;
        double c = 0.0;
        while (c == 0.0) c = coeff(rng);
        edges.push_back({post, pre});
        h.push_back(c);
    }
    Eigen::VectorXd hv(static_cast<Eigen::Index>(h.size()));
    for (size_t i = 0; i < h.size(); ++i) hv[static_cast<Eigen::Index>(i)] = h[i];
    return Topology(n, std::move(edges), hv);
}

inline Eigen::VectorXd random_vector(std::mt19937_64& rng, int size, double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    Eigen::VectorXd v(size);
    for (int i = 0; i < size; ++i) v[i] = dist(rng);
    return v;
}

inline SystemState random_state(std::mt19937_64& rng, const Topology& topo,
                                double scale = 1.0) {
    return {random_vector(rng, topo.neuron_count(), scale),
            random_vector(rng, topo.edge_count(), scale)};
}

// state drawn inside the invariant box of the given spec
inline SystemState random_state_in_box(std::mt19937_64& rng, const Topology& topo,
                                       const ModelSpec& spec) {
    const Bounds b = compute_bounds(topo, spec);
    return {random_vector(rng, topo.neuron_count(), b.neural_bound()),
            random_vector(rng, topo.edge_count(), b.w_max)};
}

inline ModelSpec random_spec(std::mt19937_64& rng, ModelKind kind, const Topology& topo) {
    std::uniform_real_distribution<double> decay(0.3, 4.0);
    std::uniform_real_distribution<double> oja(0.0, 1.5);
    std::uniform_real_distribution<double> amp(-2.0, 2.0);
    ModelSpec spec;
    spec.model = kind;
    spec.c_n = decay(rng);
    spec.c_s = decay(rng);
    spec.c_o = is_oja(kind) ? oja(rng) : 0.0;
    spec.u = Stimulus::zero(topo.neuron_count());
    for (int i = 0; i < topo.neuron_count(); ++i) {
        switch (i % 3) {
            case 0: spec.u.set(i, Signal::sinusoid(amp(rng), 2.0 + i)); break;
            case 1: spec.u.set(i, Signal::constant(amp(rng))); break;
            default: break; // leave zero
        }
    }
    spec.ubar = Stimulus::zero(topo.edge_count());
    for (int e = 0; e < topo.edge_count(); e += 2)
        spec.ubar.set(e, Signal::constant(amp(rng)));
    return spec;
}

inline constexpr ModelKind kAllModels[] = {
    ModelKind::HopfieldHebbian, ModelKind::FiringRateHebbian,
    ModelKind::HopfieldOja, ModelKind::FiringRateOja};

} // namespace hebnet::testing
