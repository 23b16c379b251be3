#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hebnet/model.hpp"
#include "hebnet/topology.hpp"

namespace hebnet {

/// Environment variable consulted for the default RNG seed when a config
/// does not set one.
inline constexpr const char* kSeedEnvVar = "HEBNET_SEED";

struct RunSettings {
    double dt = 1e-3;
    double t_end = 10.0;
    double tau = 0.0;
    std::uint64_t seed = 0;
    double init_range = 1.0;   ///< neural initial conditions drawn from [-r, r]
    double init_range_w = 1.0; ///< synaptic range; defaults to init_range
    bool dale_consistent_init = false; ///< force sign(w_e(0)) = sign(h_e)
    std::optional<double> entrain_period;
    std::optional<Eigen::VectorXd> y0;
    std::optional<Eigen::VectorXd> w0;
};

/// Parsed configuration: network + model + stimuli + run settings.
/// The on-disk format is strict JSON with 1-based neuron/edge indices;
/// unknown keys are rejected.
struct RunConfig {
    std::string notes;
    Topology topology;
    ModelSpec spec;
    RunSettings run;
};

/// Parses a config document. Throws ConfigError naming the offending
/// field/key.
RunConfig parse_config(const std::string& text);

/// Reads and parses a config file.
RunConfig load_config(const std::string& path);

/// Canonical JSON text; parse(serialize(parse(text))) == parse(text).
std::string serialize_config(const RunConfig& cfg);

/// Initial state drawn from the configured ranges with mt19937-64 seeded by
/// run.seed + draw_index (explicit y0/w0 win over random draws when
/// draw_index is 0). With dale_consistent_init, each synaptic weight takes
/// the sign of its edge coefficient.
SystemState draw_initial_state(const RunConfig& cfg, std::uint64_t draw_index = 0);

} // namespace hebnet
