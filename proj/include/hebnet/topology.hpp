#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hebnet/errors.hpp"

namespace hebnet {

/// Directed synapse from neuron `pre` to neuron `post` (0-based indices).
struct Edge {
    int post = 0;
    int pre = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sparse network topology stored as an edge list with one coupling
/// coefficient per edge. The 0/1 incidence matrices B_in (rows mark the
/// receiving neuron of each edge) and B_out (rows mark the sending neuron)
/// are kept virtual; dense copies are only materialized on request for
/// debugging and tests.
///
/// Immutable after construction, safe to share across threads.
class Topology {
public:
    /// Empty network (n = 0, no edges).
    Topology() = default;

    /// Validates and builds. Throws IndexOutOfRange, DuplicateEdge,
    /// ZeroCoefficient or DimensionMismatch; messages name the offending
    /// edge (1-based, as in all user-facing output).
    Topology(int n, std::vector<Edge> edges, Eigen::VectorXd h);

    int neuron_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Eigen::VectorXd& coefficients() const { return h_; }

    /// max_e |h_e|; 0 for an empty edge set.
    double max_abs_coefficient() const { return h_max_; }

    /// Maximum number of incoming edges over all neurons, equal to the
    /// infinity norm of B_in.
    int max_in_degree() const { return d_max_; }

    /// (B_out^T x)_e = x at the pre endpoint of e.
    Eigen::VectorXd gather_pre(const Eigen::VectorXd& x) const;

    /// (B_in^T x)_e = x at the post endpoint of e.
    Eigen::VectorXd gather_post(const Eigen::VectorXd& x) const;

    /// B_in diag(w) B_out^T v without materializing the adjacency matrix.
    /// Accumulates contributions in edge order: out[post_e] += w_e * v[pre_e].
    Eigen::VectorXd apply_weighted(const Eigen::VectorXd& w,
                                   const Eigen::VectorXd& v) const;

    /// Dense n-by-n adjacency matrix with w_e at (post_e, pre_e), zero
    /// elsewhere.
    Eigen::MatrixXd reconstruct_adjacency(const Eigen::VectorXd& w) const;

    /// Dense debug materializations of the incidence matrices.
    Eigen::MatrixXd dense_b_in() const;
    Eigen::MatrixXd dense_b_out() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    Eigen::VectorXd h_;
    double h_max_ = 0.0;
    int d_max_ = 0;
};

} // namespace hebnet
