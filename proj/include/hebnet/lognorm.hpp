#pragma once

#include <limits>

#include <Eigen/Dense>

#include "hebnet/dynamics.hpp"
#include "hebnet/errors.hpp"

namespace hebnet {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Infinity log norm: max over rows of a_ii + sum_{j != i} |a_ij|.
double lognorm_inf(const Eigen::MatrixXd& A);

/// Induced infinity norm (max absolute row sum).
double induced_inf_norm(const Eigen::MatrixXd& A);

/// Off-diagonal entries replaced by their absolute values.
Eigen::MatrixXd metzler_majorant(const Eigen::MatrixXd& A);

/// 2x2 matrix [mu_inf(nn), ||ns||_inf; ||sn||_inf, mu_inf(ss)] over the
/// neural/synaptic partition. Requires non-empty square diagonal blocks.
Eigen::Matrix2d aggregate_metzler_majorant(const JacobianBlocks& blocks);

/// Max real part over the spectrum, by a dense eigensolve.
double spectral_abscissa(const Eigen::MatrixXd& A);

/// True when all off-diagonal entries are non-negative.
bool is_metzler(const Eigen::MatrixXd& A);

/// Strong connectivity of the sparsity pattern (reachability from and to
/// node 0 along non-zero off-diagonal entries).
bool is_irreducible(const Eigen::MatrixXd& A);

/// Perron-based norm weights for a Metzler matrix M: with l and r the left
/// and right dominant eigenvectors of M + delta * ones, returns
/// eta_i = l_i^(1/p) / r_i^(1/q), q the conjugate exponent, normalized to
/// max entry 1. For irreducible M and delta = 0 the weighted log norm
/// equals the spectral abscissa; otherwise it exceeds it by an amount that
/// vanishes with delta.
///
/// p may be any value in [1, inf]. Throws NotMetzler, and
/// ReducibleWithZeroDelta when delta = 0 but M is reducible.
Eigen::VectorXd compute_eta(const Eigen::MatrixXd& M, double p, double delta);

/// Log norm of diag(eta) A diag(eta)^{-1} in the base p-norm, evaluated by
/// the closed row/column-sum formulas. Only p = 1 and p = inf are supported.
double weighted_lognorm(const Eigen::MatrixXd& A, const Eigen::VectorXd& eta, double p);

/// Upper bound on the composite log norm of the assembled block matrix:
/// the weighted log norm of its aggregate Metzler majorant.
double composite_lognorm_bound(const JacobianBlocks& blocks, const Eigen::VectorXd& eta,
                               double p);

} // namespace hebnet
