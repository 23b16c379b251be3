#pragma once

#include <Eigen/Dense>

#include "hebnet/lognorm.hpp"
#include "hebnet/model.hpp"
#include "hebnet/topology.hpp"

namespace hebnet {

/// Forward-invariance constants. The box |y_i| <= neural bound,
/// |w_e| <= w_max is forward invariant and attractive for the matching
/// model, and every trajectory obeys the exponential envelopes
///   |y_i(t)| <= (|y_i(0)| - y_max) e^{-c_n t} + y_max,
///   |w_e(t)| <= (|w_e(0)| - w_max) e^{-c_s t} + w_max.
struct Bounds {
    ModelKind model = ModelKind::HopfieldHebbian;
    double c_n = 0.0;
    double c_s = 0.0;

    double w_max = 0.0;    ///< (h_max phi_max^2 + ubar_max) / c_s
    double x_max = 0.0;    ///< (u_max + d_max phi_max w_max) / c_n
    double nu_max = 0.0;   ///< phi_max / c_n
    double h_max = 0.0;    ///< max_e |h_e|
    double b_max = 0.0;    ///< d_max h_max phi_max^2
    double u_max = 0.0;
    double ubar_max = 0.0;
    double phi_max = 0.0;
    int d_max = 0;

    /// x_max for the Hopfield models, nu_max for the firing-rate models.
    double neural_bound() const { return is_hopfield(model) ? x_max : nu_max; }
};

Bounds compute_bounds(const Topology& topo, const ModelSpec& spec);

/// Scalar inputs of the certificate, extracted from (Topology, ModelSpec).
struct MajorantParams {
    double c_n = 1.0;
    double c_s = 1.0;
    double c_o = 0.0;
    double phi_max = 1.0;
    double h_max = 0.0;
    double ubar_max = 0.0;
    int d_max = 0;
};

/// Constant 2x2 upper bound on the aggregate Metzler majorant of the
/// Jacobian, valid at every state of the invariant box. Throws InvalidParams
/// on non-positive decay rates, negative constants, or c_o inconsistent with
/// the model kind.
Eigen::Matrix2d majorant_bound(ModelKind model, const MajorantParams& p);

/// Right-hand side of the contractivity condition c_n c_s > rhs.
double condition_rhs(ModelKind model, const MajorantParams& p);

/// Analytic contraction certificate: the condition, the majorant, the
/// closed-form rate and the Perron norm weights.
struct Certificate {
    ModelKind model = ModelKind::HopfieldHebbian;
    Eigen::Matrix2d majorant = Eigen::Matrix2d::Zero();
    double condition_lhs = 0.0;  ///< c_n c_s
    double condition_rhs = 0.0;  ///< model-specific threshold
    bool satisfied = false;
    double rate = 0.0;     ///< lambda = -alpha(majorant) > 0 when satisfied, else NaN
    double c_tilde = 0.0;  ///< trace-side constant of the characteristic polynomial
    double gap = 0.0;      ///< condition_lhs - condition_rhs = det(majorant)
    Eigen::Vector2d eta = Eigen::Vector2d::Ones(); ///< composite-norm weights
    double p = kInf;       ///< aggregating-norm exponent
};

/// Evaluates the certificate for spec.model on the given network. When
/// satisfied, the model is strongly infinitesimally contracting on the
/// invariant box in the norm || [ ||y||_inf, ||w||_inf ] ||_{p,[eta]} with
/// rate at least `rate`.
Certificate certify(const Topology& topo, const ModelSpec& spec);

/// Same certificate evaluated directly from the scalar constants.
Certificate certify_params(ModelKind model, const MajorantParams& p);

} // namespace hebnet
