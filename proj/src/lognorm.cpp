#include "hebnet/lognorm.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace hebnet {

namespace {

void require_square(const Eigen::MatrixXd& A, const char* who) {
    if (A.rows() != A.cols())
        throw NonSquare(std::string(who) + ": matrix is " + std::to_string(A.rows()) +
                        "-by-" + std::to_string(A.cols()));
    if (A.rows() == 0) throw NonSquare(std::string(who) + ": matrix is empty");
}

// Reachability along non-zero off-diagonal entries; transpose = false follows
// rows (i -> j when A(i,j) != 0), transpose = true follows columns.
std::vector<bool> reachable_from_zero(const Eigen::MatrixXd& A, bool transpose) {
    const Eigen::Index n = A.rows();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<Eigen::Index> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        const Eigen::Index i = stack.back();
        stack.pop_back();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i || seen[static_cast<size_t>(j)]) continue;
            const double a = transpose ? A(j, i) : A(i, j);
            if (a != 0.0) {
                seen[static_cast<size_t>(j)] = true;
                stack.push_back(j);
            }
        }
    }
    return seen;
}

// Dominant (Perron) eigenvector of a non-negative matrix by power iteration,
// normalized to unit sum. B must be irreducible with positive diagonal so
// that the iteration converges to a strictly positive vector.
Eigen::VectorXd perron_vector(const Eigen::MatrixXd& B) {
    const Eigen::Index n = B.rows();
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    constexpr double tol = 1e-12;
    constexpr int max_iter = 100000;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd next = B * v;
        const double s = next.sum();
        if (!(s > 0.0)) throw Error("power iteration collapsed to zero");
        next /= s;
        const double diff = (next - v).cwiseAbs().maxCoeff();
        v = next;
        if (diff < tol) return v;
    }
    return v; // best effort after max_iter; tolerance is loose enough in practice
}

} // namespace

double lognorm_inf(const Eigen::MatrixXd& A) {
    require_square(A, "lognorm_inf");
    double best = -kInf;
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (j != i) s += std::abs(A(i, j));
        best = std::max(best, s + A(i, i));
    }
    return best;
}

double induced_inf_norm(const Eigen::MatrixXd& A) {
    if (A.size() == 0) return 0.0;
    return A.cwiseAbs().rowwise().sum().maxCoeff();
}

Eigen::MatrixXd metzler_majorant(const Eigen::MatrixXd& A) {
    require_square(A, "metzler_majorant");
    Eigen::MatrixXd M = A.cwiseAbs();
    M.diagonal() = A.diagonal();
    return M;
}

Eigen::Matrix2d aggregate_metzler_majorant(const JacobianBlocks& blocks) {
    if (blocks.nn.rows() != blocks.nn.cols() || blocks.ss.rows() != blocks.ss.cols())
        throw NonSquareDiagonalBlock("aggregate_metzler_majorant: diagonal blocks must be square");
    if (blocks.nn.rows() == 0 || blocks.ss.rows() == 0)
        throw NonSquareDiagonalBlock("aggregate_metzler_majorant: empty diagonal block");
    if (blocks.ns.rows() != blocks.nn.rows() || blocks.ns.cols() != blocks.ss.cols() ||
        blocks.sn.rows() != blocks.ss.rows() || blocks.sn.cols() != blocks.nn.cols())
        throw DimensionMismatch("aggregate_metzler_majorant: inconsistent block shapes");
    Eigen::Matrix2d M;
    M << lognorm_inf(blocks.nn), induced_inf_norm(blocks.ns),
         induced_inf_norm(blocks.sn), lognorm_inf(blocks.ss);
    return M;
}

double spectral_abscissa(const Eigen::MatrixXd& A) {
    require_square(A, "spectral_abscissa");
    Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw Error("spectral_abscissa: eigensolver failed");
    return es.eigenvalues().real().maxCoeff();
}

bool is_metzler(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols()) return false;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (i != j && A(i, j) < 0.0) return false;
    return true;
}

bool is_irreducible(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols() || A.rows() == 0) return false;
    if (A.rows() == 1) return true;
    const auto fwd = reachable_from_zero(A, false);
    const auto bwd = reachable_from_zero(A, true);
    for (size_t i = 0; i < fwd.size(); ++i)
        if (!fwd[i] || !bwd[i]) return false;
    return true;
}

Eigen::VectorXd compute_eta(const Eigen::MatrixXd& M, double p, double delta) {
    require_square(M, "compute_eta");
    if (!is_metzler(M)) throw NotMetzler("compute_eta: matrix has negative off-diagonal entries");
    if (!(p >= 1.0)) throw UnsupportedExponent("compute_eta: p must be in [1, inf]");
    if (delta < 0.0) throw InvalidParams("compute_eta: delta must be non-negative");
    if (delta == 0.0 && !is_irreducible(M))
        throw ReducibleWithZeroDelta("compute_eta: reducible matrix needs delta > 0");

    const Eigen::Index n = M.rows();
    Eigen::MatrixXd A = M + delta * Eigen::MatrixXd::Ones(n, n);
    // Shift into the non-negative primitive regime; eigenvectors are unchanged.
    const double shift = 1.0 + std::max(0.0, -A.diagonal().minCoeff());
    Eigen::MatrixXd B = A + shift * Eigen::MatrixXd::Identity(n, n);

    const Eigen::VectorXd r = perron_vector(B);
    const Eigen::VectorXd l = perron_vector(B.transpose());

    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double inv_q = 1.0 - inv_p;
    Eigen::VectorXd eta(n);
    for (Eigen::Index i = 0; i < n; ++i)
        eta[i] = std::pow(l[i], inv_p) / std::pow(r[i], inv_q);
    eta /= eta.maxCoeff();
    return eta;
}

double weighted_lognorm(const Eigen::MatrixXd& A, const Eigen::VectorXd& eta, double p) {
    require_square(A, "weighted_lognorm");
    if (eta.size() != A.rows())
        throw DimensionMismatch("weighted_lognorm: weight length " + std::to_string(eta.size()) +
                                " for a " + std::to_string(A.rows()) + "-by-" +
                                std::to_string(A.cols()) + " matrix");
    for (Eigen::Index i = 0; i < eta.size(); ++i)
        if (!(eta[i] > 0.0))
            throw NonPositiveWeight("weighted_lognorm: eta[" + std::to_string(i + 1) +
                                    "] is not positive");
    const bool inf_norm = std::isinf(p);
    if (!inf_norm && p != 1.0)
        throw UnsupportedExponent("weighted_lognorm: only p = 1 and p = inf are supported");

    double best = -kInf;
    if (inf_norm) {
        for (Eigen::Index i = 0; i < A.rows(); ++i) {
            double s = 0.0;
            for (Eigen::Index j = 0; j < A.cols(); ++j)
                if (j != i) s += std::abs(A(i, j)) * (eta[i] / eta[j]);
            best = std::max(best, s + A(i, i));
        }
    } else {
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            double s = 0.0;
            for (Eigen::Index i = 0; i < A.rows(); ++i)
                if (i != j) s += std::abs(A(i, j)) * (eta[i] / eta[j]);
            best = std::max(best, s + A(j, j));
        }
    }
    return best;
}

double composite_lognorm_bound(const JacobianBlocks& blocks, const Eigen::VectorXd& eta,
                               double p) {
    return weighted_lognorm(aggregate_metzler_majorant(blocks), eta, p);
}

} // namespace hebnet
