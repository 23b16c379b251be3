#pragma once

#include <Eigen/Dense>

#include "hebnet/model.hpp"
#include "hebnet/topology.hpp"

namespace hebnet {

/// Right-hand side of the selected low-dimensional model at (state, t).
///
/// Hopfield neural part:     dy = -c_n y + B_in diag(w) B_out^T Phi(y) + u(t)
/// firing-rate neural part:  dy = -c_n y + Phi(B_in diag(w) B_out^T y + u(t))
/// synaptic part:            dw_e = h_e phi(y_pre) phi(y_post)
///                                  - (c_s + c_o phi(y_post)^2) w_e + ubar_e(t)
/// with c_o = 0 for the Hebbian models, so the Oja models reduce to them
/// bitwise when c_o = 0.
SystemState vector_field(const Topology& topo, const ModelSpec& spec,
                         const SystemState& state, double t);

/// Same right-hand side, but every activation function reads `y_activation`
/// instead of state.y. vector_field() is the special case
/// y_activation = state.y; the delayed integrator passes the neural state
/// from t - tau here.
SystemState vector_field_delayed(const Topology& topo, const ModelSpec& spec,
                                 const SystemState& state, double t,
                                 const Eigen::VectorXd& y_activation);

/// Full-dimensional state: n neural variables plus a dense n-by-n synaptic
/// matrix. Used as a test oracle for the sparse formulation and for
/// experiments that need an arbitrary dense coupling pattern H.
struct DenseState {
    Eigen::VectorXd y;
    Eigen::MatrixXd W;

    bool all_finite() const { return y.allFinite() && W.allFinite(); }
};

/// Right-hand side of the full-dimensional model. Ubar is the synaptic
/// stimulus matrix at time t (zero off the support of H by convention; see
/// broadcast_edge_stimulus).
DenseState dense_vector_field(const ModelSpec& spec, const Eigen::MatrixXd& H,
                              const Eigen::MatrixXd& Ubar, const DenseState& state,
                              double t);

/// Places ubar_e(t) at (post_e, pre_e) for every edge, zero elsewhere.
Eigen::MatrixXd broadcast_edge_stimulus(const Topology& topo, const Stimulus& ubar,
                                        double t);

/// Analytic Jacobian of vector_field, partitioned into the neural/synaptic
/// blocks: nn is n-by-n, ns n-by-m, sn m-by-n, ss m-by-m.
struct JacobianBlocks {
    Eigen::MatrixXd nn, ns, sn, ss;

    /// Assembled (n+m)-by-(n+m) matrix [[nn, ns], [sn, ss]].
    Eigen::MatrixXd full() const;
};

JacobianBlocks jacobian(const Topology& topo, const ModelSpec& spec,
                        const SystemState& state, double t);

} // namespace hebnet
