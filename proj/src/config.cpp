#include "hebnet/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hebnet {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240817ULL;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(where, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) fail(where, "unknown key '" + it.key() + "'");
    }
}

const json& require(const json& j, const std::string& where, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
    return *it;
}

double as_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

double opt_number(const json& j, const std::string& where, const char* key, double dflt) {
    auto it = j.find(key);
    return it == j.end() ? dflt : as_number(*it, where + "." + key);
}

Activation parse_activation(const json& j, const std::string& where) {
    check_keys(j, where, {"kind", "gain", "ceiling"});
    const json& kind = require(j, where, "kind");
    if (!kind.is_string()) fail(where + ".kind", "expected a string");
    const std::string k = kind.get<std::string>();
    try {
        if (k == "sigmoid") {
            if (j.size() != 1) fail(where, "'sigmoid' takes no parameters");
            return Activation::sigmoid();
        }
        if (k == "scaled_sigmoid")
            return Activation::scaled_sigmoid(
                as_number(require(j, where, "gain"), where + ".gain"),
                as_number(require(j, where, "ceiling"), where + ".ceiling"));
    } catch (const InvalidParams& e) {
        fail(where, e.what());
    }
    fail(where + ".kind", "unknown activation '" + k + "'");
}

json activation_to_json(const Activation& a) {
    if (a == Activation::sigmoid()) return json{{"kind", "sigmoid"}};
    return json{{"kind", "scaled_sigmoid"}, {"gain", a.gain()}, {"ceiling", a.max_value()}};
}

Signal parse_signal(const json& j, const std::string& where, const char* index_key) {
    const json& type = require(j, where, "type");
    if (!type.is_string()) fail(where + ".type", "expected a string");
    const std::string t = type.get<std::string>();
    if (t == "zero") {
        check_keys(j, where, {index_key, "type"});
        return Signal::zero();
    }
    if (t == "const" || t == "tanh_ramp") {
        check_keys(j, where, {index_key, "type", "amplitude"});
        const double a = as_number(require(j, where, "amplitude"), where + ".amplitude");
        return t == "const" ? Signal::constant(a) : Signal::tanh_ramp(a);
    }
    if (t == "sin" || t == "cos") {
        check_keys(j, where, {index_key, "type", "amplitude", "omega", "phase"});
        const double amplitude =
            as_number(require(j, where, "amplitude"), where + ".amplitude");
        const double omega = as_number(require(j, where, "omega"), where + ".omega");
        double phase = opt_number(j, where, "phase", 0.0);
        if (t == "cos") phase += std::numbers::pi / 2.0;
        return Signal::sinusoid(amplitude, omega, phase);
    }
    fail(where + ".type", "unknown signal type '" + t + "'");
}

json signal_to_json(const Signal& s) {
    switch (s.kind) {
        case Signal::Kind::Zero: return json{{"type", "zero"}};
        case Signal::Kind::Constant: return json{{"type", "const"}, {"amplitude", s.amplitude}};
        case Signal::Kind::Sinusoid:
            return json{{"type", "sin"},
                        {"amplitude", s.amplitude},
                        {"omega", s.omega},
                        {"phase", s.phase}};
        case Signal::Kind::TanhRamp:
            return json{{"type", "tanh_ramp"}, {"amplitude", s.amplitude}};
    }
    return json{{"type", "zero"}};
}

Stimulus parse_stimulus_list(const json& j, const std::string& where, int channels,
                             const char* index_key) {
    Stimulus stim(channels);
    if (!j.is_array()) fail(where, "expected an array");
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string entry = where + "[" + std::to_string(i + 1) + "]";
        const json& item = j[i];
        if (!item.is_object()) fail(entry, "expected an object");
        const int idx = as_int(require(item, entry, index_key), entry);
        if (idx < 1 || idx > channels)
            fail(entry, std::string(index_key) + " " + std::to_string(idx) + " outside 1.." +
                            std::to_string(channels));
        stim.set(idx - 1, parse_signal(item, entry, index_key));
    }
    return stim;
}

Eigen::VectorXd parse_vector(const json& j, const std::string& where, int expected) {
    if (!j.is_array()) fail(where, "expected an array");
    if (static_cast<int>(j.size()) != expected)
        fail(where, "expected " + std::to_string(expected) + " entries, got " +
                        std::to_string(j.size()));
    Eigen::VectorXd v(expected);
    for (int i = 0; i < expected; ++i)
        v[i] = as_number(j[static_cast<size_t>(i)], where + "[" + std::to_string(i + 1) + "]");
    return v;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnvVar)) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return kDefaultSeed;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }

    check_keys(j, "config", {"notes", "network", "model", "stimuli", "run"});
    RunConfig cfg;
    if (auto it = j.find("notes"); it != j.end()) {
        if (!it->is_string()) fail("notes", "expected a string");
        cfg.notes = it->get<std::string>();
    }

    // network
    const json& net = require(j, "config", "network");
    check_keys(net, "network", {"n", "edges"});
    const int n = as_int(require(net, "network", "n"), "network.n");
    const json& edges_json = require(net, "network", "edges");
    if (!edges_json.is_array()) fail("network.edges", "expected an array");
    std::vector<Edge> edges;
    Eigen::VectorXd h(static_cast<Eigen::Index>(edges_json.size()));
    for (size_t e = 0; e < edges_json.size(); ++e) {
        const std::string where = "network.edges[" + std::to_string(e + 1) + "]";
        const json& item = edges_json[e];
        check_keys(item, where, {"post", "pre", "h"});
        const int post = as_int(require(item, where, "post"), where + ".post");
        const int pre = as_int(require(item, where, "pre"), where + ".pre");
        edges.push_back({post - 1, pre - 1});
        h[static_cast<Eigen::Index>(e)] = as_number(require(item, where, "h"), where + ".h");
    }
    try {
        cfg.topology = Topology(n, std::move(edges), std::move(h));
    } catch (const Error& e) {
        fail("network", e.what());
    }
    const int m = cfg.topology.edge_count();

    // model
    const json& model = require(j, "config", "model");
    check_keys(model, "model", {"kind", "c_n", "c_s", "c_o", "activation", "synaptic_activation"});
    const json& kind = require(model, "model", "kind");
    if (!kind.is_string()) fail("model.kind", "expected a string");
    try {
        cfg.spec.model = parse_model_kind(kind.get<std::string>());
    } catch (const InvalidParams& e) {
        fail("model.kind", e.what());
    }
    cfg.spec.c_n = as_number(require(model, "model", "c_n"), "model.c_n");
    cfg.spec.c_s = as_number(require(model, "model", "c_s"), "model.c_s");
    cfg.spec.c_o = opt_number(model, "model", "c_o", 0.0);
    if (auto it = model.find("activation"); it != model.end()) {
        cfg.spec.act_neural = parse_activation(*it, "model.activation");
        cfg.spec.act_synaptic = cfg.spec.act_neural;
    }
    if (auto it = model.find("synaptic_activation"); it != model.end())
        cfg.spec.act_synaptic = parse_activation(*it, "model.synaptic_activation");

    // stimuli
    cfg.spec.u = Stimulus::zero(n);
    cfg.spec.ubar = Stimulus::zero(m);
    if (auto it = j.find("stimuli"); it != j.end()) {
        check_keys(*it, "stimuli", {"u", "ubar"});
        if (auto u = it->find("u"); u != it->end())
            cfg.spec.u = parse_stimulus_list(*u, "stimuli.u", n, "neuron");
        if (auto ub = it->find("ubar"); ub != it->end())
            cfg.spec.ubar = parse_stimulus_list(*ub, "stimuli.ubar", m, "edge");
    }

    // run
    const json& run = require(j, "config", "run");
    check_keys(run, "run",
               {"dt", "t_end", "tau", "seed", "init_range", "init_range_w",
                "dale_consistent_init", "entrainment_period", "y0", "w0"});
    cfg.run.dt = as_number(require(run, "run", "dt"), "run.dt");
    cfg.run.t_end = as_number(require(run, "run", "t_end"), "run.t_end");
    cfg.run.tau = opt_number(run, "run", "tau", 0.0);
    if (auto it = run.find("seed"); it != run.end()) {
        if (!it->is_number_integer() && !it->is_number_unsigned())
            fail("run.seed", "expected an integer");
        cfg.run.seed = it->get<std::uint64_t>();
    } else {
        cfg.run.seed = default_seed();
    }
    cfg.run.init_range = opt_number(run, "run", "init_range", 1.0);
    cfg.run.init_range_w = opt_number(run, "run", "init_range_w", cfg.run.init_range);
    if (auto it = run.find("dale_consistent_init"); it != run.end()) {
        if (!it->is_boolean()) fail("run.dale_consistent_init", "expected a boolean");
        cfg.run.dale_consistent_init = it->get<bool>();
    }
    if (auto it = run.find("entrainment_period"); it != run.end())
        cfg.run.entrain_period = as_number(*it, "run.entrainment_period");
    if (auto it = run.find("y0"); it != run.end())
        cfg.run.y0 = parse_vector(*it, "run.y0", n);
    if (auto it = run.find("w0"); it != run.end())
        cfg.run.w0 = parse_vector(*it, "run.w0", m);

    try {
        cfg.spec.validate(cfg.topology);
    } catch (const Error& e) {
        fail("model", e.what());
    }
    if (!(cfg.run.dt > 0.0)) fail("run.dt", "must be positive");
    if (!(cfg.run.t_end >= cfg.run.dt)) fail("run.t_end", "must be at least dt");
    if (cfg.run.tau < 0.0) fail("run.tau", "must be non-negative");
    if (cfg.run.init_range < 0.0 || cfg.run.init_range_w < 0.0)
        fail("run.init_range", "must be non-negative");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    json j;
    if (!cfg.notes.empty()) j["notes"] = cfg.notes;

    json net;
    net["n"] = cfg.topology.neuron_count();
    net["edges"] = json::array();
    for (int e = 0; e < cfg.topology.edge_count(); ++e) {
        const Edge& ed = cfg.topology.edges()[static_cast<size_t>(e)];
        net["edges"].push_back(json{{"post", ed.post + 1},
                                    {"pre", ed.pre + 1},
                                    {"h", cfg.topology.coefficients()[e]}});
    }
    j["network"] = net;

    json model;
    model["kind"] = to_string(cfg.spec.model);
    model["c_n"] = cfg.spec.c_n;
    model["c_s"] = cfg.spec.c_s;
    model["c_o"] = cfg.spec.c_o;
    model["activation"] = activation_to_json(cfg.spec.act_neural);
    if (!(cfg.spec.act_synaptic == cfg.spec.act_neural))
        model["synaptic_activation"] = activation_to_json(cfg.spec.act_synaptic);
    j["model"] = model;

    json stimuli;
    auto channel_entry = [](const char* key, int index, const Signal& s) {
        json item;
        item[key] = index + 1;
        const json sig = signal_to_json(s);
        for (auto it = sig.begin(); it != sig.end(); ++it) item[it.key()] = it.value();
        return item;
    };
    json u = json::array();
    for (int i = 0; i < cfg.spec.u.channels(); ++i) {
        if (cfg.spec.u.signal(i).kind == Signal::Kind::Zero) continue;
        u.push_back(channel_entry("neuron", i, cfg.spec.u.signal(i)));
    }
    json ubar = json::array();
    for (int e = 0; e < cfg.spec.ubar.channels(); ++e) {
        if (cfg.spec.ubar.signal(e).kind == Signal::Kind::Zero) continue;
        ubar.push_back(channel_entry("edge", e, cfg.spec.ubar.signal(e)));
    }
    if (!u.empty()) stimuli["u"] = u;
    if (!ubar.empty()) stimuli["ubar"] = ubar;
    if (!stimuli.empty()) j["stimuli"] = stimuli;

    json run;
    run["dt"] = cfg.run.dt;
    run["t_end"] = cfg.run.t_end;
    run["tau"] = cfg.run.tau;
    run["seed"] = cfg.run.seed;
    run["init_range"] = cfg.run.init_range;
    run["init_range_w"] = cfg.run.init_range_w;
    run["dale_consistent_init"] = cfg.run.dale_consistent_init;
    if (cfg.run.entrain_period) run["entrainment_period"] = *cfg.run.entrain_period;
    if (cfg.run.y0) {
        json v = json::array();
        for (Eigen::Index i = 0; i < cfg.run.y0->size(); ++i) v.push_back((*cfg.run.y0)[i]);
        run["y0"] = v;
    }
    if (cfg.run.w0) {
        json v = json::array();
        for (Eigen::Index i = 0; i < cfg.run.w0->size(); ++i) v.push_back((*cfg.run.w0)[i]);
        run["w0"] = v;
    }
    j["run"] = run;
    return j.dump(2) + "\n";
}

SystemState draw_initial_state(const RunConfig& cfg, std::uint64_t draw_index) {
    const int n = cfg.topology.neuron_count();
    const int m = cfg.topology.edge_count();
    std::mt19937_64 rng(cfg.run.seed + draw_index);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    SystemState s;
    s.y.resize(n);
    for (int i = 0; i < n; ++i) s.y[i] = cfg.run.init_range * unit(rng);
    s.w.resize(m);
    for (int e = 0; e < m; ++e) {
        double w = cfg.run.init_range_w * unit(rng);
        if (cfg.run.dale_consistent_init)
            w = cfg.topology.coefficients()[e] > 0.0 ? std::abs(w) : -std::abs(w);
        s.w[e] = w;
    }
    if (draw_index == 0) {
        if (cfg.run.y0) s.y = *cfg.run.y0;
        if (cfg.run.w0) s.w = *cfg.run.w0;
    }
    return s;
}

} // namespace hebnet
