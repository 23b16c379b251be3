#pragma once

#include <string>

#include <Eigen/Dense>

#include "hebnet/activation.hpp"
#include "hebnet/stimulus.hpp"
#include "hebnet/topology.hpp"

namespace hebnet {

/// The four coupled neural-synaptic systems: Hopfield or firing-rate neural
/// dynamics combined with the plain Hebbian rule or the Oja-like rule.
enum class ModelKind {
    HopfieldHebbian,
    FiringRateHebbian,
    HopfieldOja,
    FiringRateOja,
};

inline bool is_hopfield(ModelKind m) {
    return m == ModelKind::HopfieldHebbian || m == ModelKind::HopfieldOja;
}
inline bool is_firing_rate(ModelKind m) { return !is_hopfield(m); }
inline bool is_oja(ModelKind m) {
    return m == ModelKind::HopfieldOja || m == ModelKind::FiringRateOja;
}

const char* to_string(ModelKind m);
ModelKind parse_model_kind(const std::string& name); // throws InvalidParams

/// Model parameters shared by all operations: decay rates, activation
/// functions and external stimuli.
///
/// Two activation roles are supported (the neural equation and the synaptic
/// rule may use different sigmoids); by default both are the same function.
struct ModelSpec {
    ModelKind model = ModelKind::HopfieldHebbian;
    double c_n = 1.0;  ///< neural decay rate, > 0
    double c_s = 1.0;  ///< synaptic decay rate, > 0
    double c_o = 0.0;  ///< Oja coefficient, >= 0; must be 0 for the Hebbian models
    Activation act_neural = Activation::sigmoid();
    Activation act_synaptic = Activation::sigmoid();
    Stimulus u;    ///< per-neuron stimulus
    Stimulus ubar; ///< per-edge stimulus

    /// Supremum of the activations over both roles; the certificate constants
    /// conservatively use the larger of the two.
    double phi_max() const {
        return std::max(act_neural.max_value(), act_synaptic.max_value());
    }

    /// Throws InvalidParams / DimensionMismatch when the spec is inconsistent
    /// with itself or with the topology.
    void validate(const Topology& topo) const;
};

/// Packed state of the low-dimensional formulation: y holds the membrane
/// potentials (Hopfield models) or firing rates (firing-rate models), w the
/// synaptic weights, one per edge.
struct SystemState {
    Eigen::VectorXd y;
    Eigen::VectorXd w;

    bool all_finite() const { return y.allFinite() && w.allFinite(); }
};

} // namespace hebnet
