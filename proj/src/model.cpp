#include "hebnet/model.hpp"

namespace hebnet {

const char* to_string(ModelKind m) {
    switch (m) {
        case ModelKind::HopfieldHebbian: return "HH";
        case ModelKind::FiringRateHebbian: return "FH";
        case ModelKind::HopfieldOja: return "HO";
        case ModelKind::FiringRateOja: return "FO";
    }
    return "?";
}

ModelKind parse_model_kind(const std::string& name) {
    if (name == "HH") return ModelKind::HopfieldHebbian;
    if (name == "FH") return ModelKind::FiringRateHebbian;
    if (name == "HO") return ModelKind::HopfieldOja;
    if (name == "FO") return ModelKind::FiringRateOja;
    throw InvalidParams("unknown model kind '" + name + "' (expected HH, FH, HO or FO)");
}

void ModelSpec::validate(const Topology& topo) const {
    if (!(c_n > 0.0)) throw InvalidParams("c_n must be positive");
    if (!(c_s > 0.0)) throw InvalidParams("c_s must be positive");
    if (c_o < 0.0) throw InvalidParams("c_o must be non-negative");
    if (!is_oja(model) && c_o != 0.0)
        throw InvalidParams(std::string("c_o must be 0 for model ") + to_string(model));
    if (u.channels() != topo.neuron_count())
        throw DimensionMismatch("u has " + std::to_string(u.channels()) +
                                " channels for " + std::to_string(topo.neuron_count()) +
                                " neurons");
    if (ubar.channels() != topo.edge_count())
        throw DimensionMismatch("ubar has " + std::to_string(ubar.channels()) +
                                " channels for " + std::to_string(topo.edge_count()) +
                                " edges");
}

} // namespace hebnet
