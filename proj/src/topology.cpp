#include "hebnet/topology.hpp"

#include <cmath>
#include <set>
#include <string>

namespace hebnet {

namespace {
std::string edge_label(int e, const Edge& ed) {
    // 1-based in messages
    return "edge " + std::to_string(e + 1) + " (post " +
           std::to_string(ed.post + 1) + ", pre " + std::to_string(ed.pre + 1) +
           ")";
}
} // namespace

Topology::Topology(int n, std::vector<Edge> edges, Eigen::VectorXd h)
    : n_(n), edges_(std::move(edges)), h_(std::move(h)) {
    if (n_ < 0) throw InvalidParams("neuron count must be non-negative");
    if (static_cast<int>(edges_.size()) != h_.size())
        throw DimensionMismatch("edge list has " + std::to_string(edges_.size()) +
                                " entries but h has " + std::to_string(h_.size()));

    std::set<std::pair<int, int>> seen;
    std::vector<int> in_degree(static_cast<size_t>(n_), 0);
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (ed.post < 0 || ed.post >= n_ || ed.pre < 0 || ed.pre >= n_)
            throw IndexOutOfRange(edge_label(e, ed) + ": neuron index outside 1.." +
                                  std::to_string(n_));
        if (!seen.insert({ed.post, ed.pre}).second)
            throw DuplicateEdge(edge_label(e, ed) + ": duplicate (post, pre) pair");
        if (h_[e] == 0.0)
            throw ZeroCoefficient(edge_label(e, ed) +
                                  ": zero coupling coefficient (drop the edge instead)");
        ++in_degree[static_cast<size_t>(ed.post)];
        h_max_ = std::max(h_max_, std::abs(h_[e]));
    }
    for (int deg : in_degree) d_max_ = std::max(d_max_, deg);
}

Eigen::VectorXd Topology::gather_pre(const Eigen::VectorXd& x) const {
    if (x.size() != n_)
        throw DimensionMismatch("gather_pre: expected length " + std::to_string(n_) +
                                ", got " + std::to_string(x.size()));
    Eigen::VectorXd out(edge_count());
    for (int e = 0; e < edge_count(); ++e) out[e] = x[edges_[static_cast<size_t>(e)].pre];
    return out;
}

Eigen::VectorXd Topology::gather_post(const Eigen::VectorXd& x) const {
    if (x.size() != n_)
        throw DimensionMismatch("gather_post: expected length " + std::to_string(n_) +
                                ", got " + std::to_string(x.size()));
    Eigen::VectorXd out(edge_count());
    for (int e = 0; e < edge_count(); ++e) out[e] = x[edges_[static_cast<size_t>(e)].post];
    return out;
}

Eigen::VectorXd Topology::apply_weighted(const Eigen::VectorXd& w,
                                         const Eigen::VectorXd& v) const {
    if (w.size() != edge_count())
        throw DimensionMismatch("apply_weighted: expected " + std::to_string(edge_count()) +
                                " weights, got " + std::to_string(w.size()));
    if (v.size() != n_)
        throw DimensionMismatch("apply_weighted: expected vector of length " +
                                std::to_string(n_) + ", got " + std::to_string(v.size()));
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        out[ed.post] += w[e] * v[ed.pre];
    }
    return out;
}

Eigen::MatrixXd Topology::reconstruct_adjacency(const Eigen::VectorXd& w) const {
    if (w.size() != edge_count())
        throw DimensionMismatch("reconstruct_adjacency: expected " +
                                std::to_string(edge_count()) + " weights, got " +
                                std::to_string(w.size()));
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n_, n_);
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        W(ed.post, ed.pre) = w[e];
    }
    return W;
}

Eigen::MatrixXd Topology::dense_b_in() const {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n_, edge_count());
    for (int e = 0; e < edge_count(); ++e) B(edges_[static_cast<size_t>(e)].post, e) = 1.0;
    return B;
}

Eigen::MatrixXd Topology::dense_b_out() const {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n_, edge_count());
    for (int e = 0; e < edge_count(); ++e) B(edges_[static_cast<size_t>(e)].pre, e) = 1.0;
    return B;
}

} // namespace hebnet
