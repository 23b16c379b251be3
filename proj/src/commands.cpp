#include "hebnet/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "hebnet/certificate.hpp"
#include "hebnet/monitors.hpp"
#include "hebnet/rate.hpp"

namespace hebnet {

namespace {

std::string fmt(double v, int prec = 6) {
    std::ostringstream ss;
    ss << std::setprecision(prec) << v;
    return ss.str();
}

Trajectory run_trajectory(const RunConfig& cfg, const SystemState& s0) {
    if (cfg.run.tau > 0.0)
        return integrate_delayed(cfg.topology, cfg.spec, s0, cfg.run.t_end, cfg.run.dt,
                                 cfg.run.tau);
    return integrate(cfg.topology, cfg.spec, s0, cfg.run.t_end, cfg.run.dt);
}

std::vector<RateEstimate> pair_rates(const RunConfig& cfg, int pairs,
                                     const Eigen::Vector2d& eta) {
    std::vector<RateEstimate> rates;
    rates.reserve(static_cast<size_t>(pairs));
    for (int i = 0; i < pairs; ++i) {
        // draw indices start at 1 so explicit y0/w0 never replace a pair draw
        const SystemState a0 = draw_initial_state(cfg, 2 * static_cast<std::uint64_t>(i) + 1);
        const SystemState b0 = draw_initial_state(cfg, 2 * static_cast<std::uint64_t>(i) + 2);
        const Trajectory ta = run_trajectory(cfg, a0);
        const Trajectory tb = run_trajectory(cfg, b0);
        rates.push_back(empirical_rate(ta, tb, eta, kInf));
    }
    return rates;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

RunConfig with_param(const RunConfig& cfg, const std::string& param, double v) {
    RunConfig out = cfg;
    if (param == "c_n") {
        out.spec.c_n = v;
    } else if (param == "c_s") {
        out.spec.c_s = v;
    } else if (param == "c_o") {
        out.spec.c_o = v;
    } else if (param == "h-scale") {
        if (!(v > 0.0)) throw InvalidParams("h-scale must be positive");
        out.topology = Topology(cfg.topology.neuron_count(), cfg.topology.edges(),
                                v * cfg.topology.coefficients());
    } else if (param == "ubar-scale") {
        if (v < 0.0) throw InvalidParams("ubar-scale must be non-negative");
        Stimulus scaled(cfg.spec.ubar.channels());
        for (int e = 0; e < cfg.spec.ubar.channels(); ++e) {
            Signal s = cfg.spec.ubar.signal(e);
            s.amplitude *= v;
            scaled.set(e, s);
        }
        out.spec.ubar = scaled;
    } else {
        throw UnknownParam("unknown sweep parameter '" + param +
                           "' (expected c_n, c_s, c_o, h-scale or ubar-scale)");
    }
    return out;
}

} // namespace

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    const Certificate cert = certify(cfg.topology, cfg.spec);
    const Bounds bounds = compute_bounds(cfg.topology, cfg.spec);

    out << "model: " << to_string(cert.model) << "  (n = " << cfg.topology.neuron_count()
        << ", m = " << cfg.topology.edge_count() << ")\n";
    out << "constants: d_max = " << bounds.d_max << "  h_max = " << fmt(bounds.h_max)
        << "  phi_max = " << fmt(bounds.phi_max) << "  ubar_max = " << fmt(bounds.ubar_max)
        << "\n";
    out << "majorant:\n";
    for (int i = 0; i < 2; ++i)
        out << "  [ " << std::setw(12) << fmt(cert.majorant(i, 0)) << "  " << std::setw(12)
            << fmt(cert.majorant(i, 1)) << " ]\n";
    out << "condition: c_n*c_s = " << fmt(cert.condition_lhs)
        << (cert.satisfied ? " > " : " <= ") << fmt(cert.condition_rhs) << "  ->  "
        << (cert.satisfied ? "satisfied" : "NOT satisfied") << "\n";
    if (cert.satisfied) out << "contraction rate lambda: " << fmt(cert.rate) << "\n";
    out << "eta: [" << fmt(cert.eta[0]) << ", " << fmt(cert.eta[1]) << "]  (p = inf)\n";
    out << "bounds: w_max = " << fmt(bounds.w_max)
        << "  x_max = " << fmt(bounds.x_max) << "  nu_max = " << fmt(bounds.nu_max) << "\n";
    return cert.satisfied ? kExitCertified : kExitNotCertified;
}

int cmd_simulate(const RunConfig& cfg, const std::string& csv_path, std::ostream& out) {
    const SystemState s0 = draw_initial_state(cfg);
    const Trajectory traj = run_trajectory(cfg, s0);

    out << "model " << to_string(cfg.spec.model) << ", t in [0, "
        << fmt(traj.times.back()) << "], dt = " << fmt(cfg.run.dt);
    if (traj.tau > 0.0) out << ", activation delay tau = " << fmt(traj.tau);
    out << "\n";
    for (const std::string& note : traj.notes) out << "note: " << note << "\n";

    const Bounds bounds = compute_bounds(cfg.topology, cfg.spec);
    const InvarianceReport inv = check_invariance(traj, bounds);
    out << "invariance: " << inv.violations.size() << " violation(s)  (|y| <= "
        << fmt(bounds.neural_bound()) << ", |w| <= " << fmt(bounds.w_max) << ")\n";
    for (size_t i = 0; i < std::min<size_t>(inv.violations.size(), 5); ++i) {
        const auto& v = inv.violations[i];
        out << "  t = " << fmt(v.t) << "  " << (v.synaptic ? "w_" : "y_") << (v.index + 1)
            << " exceeds its envelope by " << fmt(v.margin) << "\n";
    }

    const DaleReport dale = check_dale(traj, cfg.topology, cfg.spec.ubar);
    int preserved = 0, violated = 0, na = 0;
    for (const auto& e : dale.edges) {
        if (e.verdict == DaleVerdict::Preserved) ++preserved;
        else if (e.verdict == DaleVerdict::Violated) ++violated;
        else ++na;
    }
    out << "dale: " << preserved << " preserved, " << violated << " violated, " << na
        << " not applicable\n";
    for (const auto& e : dale.edges)
        if (e.verdict == DaleVerdict::Violated)
            out << "  edge " << (e.edge + 1) << " first sign flip at t = "
                << fmt(e.first_violation_t) << "\n";

    if (cfg.run.entrain_period) {
        const Certificate cert = certify(cfg.topology, cfg.spec);
        const double transient =
            cert.satisfied ? 5.0 / cert.rate : 0.5 * traj.times.back();
        try {
            const EntrainmentReport ent =
                check_entrainment(traj, *cfg.run.entrain_period, transient);
            out << "entrainment (T = " << fmt(ent.period) << "): residual "
                << fmt(ent.residual) << (ent.entrained ? " < " : " >= ")
                << fmt(ent.tolerance) << "  ->  "
                << (ent.entrained ? "entrained" : "not entrained") << "\n";
        } catch (const TrajectoryTooShort& e) {
            out << "entrainment: skipped (" << e.what() << ")\n";
        }
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw ConfigError("cannot open output file '" + csv_path + "'");
        write_csv(traj, csv);
        out << "trajectory written to " << csv_path << "\n";
    }
    return kExitCertified;
}

void write_gnuplot_script(const RunConfig& cfg, const std::string& csv_path,
                          std::ostream& out) {
    const int cols = 1 + cfg.topology.neuron_count() + cfg.topology.edge_count();
    out << "set datafile separator ','\n"
        << "set key outside\n"
        << "set xlabel 't'\n"
        << "plot for [col=2:" << cols << "] '" << csv_path
        << "' using 1:col with lines title columnheader(col)\n";
}

int cmd_rate(const RunConfig& cfg, int pairs, std::ostream& out) {
    if (pairs < 1) throw InvalidParams("--pairs must be at least 1");
    const Certificate cert = certify(cfg.topology, cfg.spec);
    if (!cert.satisfied)
        out << "warning: certificate not satisfied; empirical rates carry no guarantee\n";
    const Eigen::Vector2d eta = cert.satisfied ? cert.eta : Eigen::Vector2d::Ones().eval();

    const std::vector<RateEstimate> rates = pair_rates(cfg, pairs, eta);
    std::vector<double> values;
    for (size_t i = 0; i < rates.size(); ++i) {
        const RateEstimate& r = rates[i];
        out << "pair " << std::setw(3) << (i + 1) << ": rate " << fmt(r.rate);
        if (r.saturated)
            out << " (saturated: identical trajectories)";
        else
            out << "  (fit residual " << fmt(r.residual, 3) << ", window ["
                << fmt(r.window.t_start) << ", " << fmt(r.window.t_end) << "])";
        out << "\n";
        if (!r.saturated) values.push_back(r.rate);
    }
    if (!values.empty()) {
        out << "min rate: " << fmt(*std::min_element(values.begin(), values.end()))
            << "  median rate: " << fmt(median(values)) << "\n";
        if (cert.satisfied)
            out << "analytic lower bound lambda: " << fmt(cert.rate) << "\n";
    }
    return kExitCertified;
}

std::vector<SweepPoint> run_sweep(const RunConfig& cfg, const std::string& param,
                                  double a, double b, int steps, int jobs,
                                  int empirical_pairs) {
    if (steps < 1) throw EmptyRange("sweep needs at least one grid point");
    if (steps == 1 && a != b)
        throw EmptyRange("single-point range requires matching endpoints");
    // validate the parameter name eagerly so bad names fail before any work
    (void)with_param(cfg, param, a);

    std::vector<double> grid(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i)
        grid[static_cast<size_t>(i)] =
            steps == 1 ? a : a + (b - a) * static_cast<double>(i) / (steps - 1);

    std::vector<SweepPoint> points(grid.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto eval_point = [&](size_t i) {
        const RunConfig local = with_param(cfg, param, grid[i]);
        SweepPoint pt;
        pt.value = grid[i];
        const Certificate cert = certify(local.topology, local.spec);
        pt.satisfied = cert.satisfied;
        pt.lambda = cert.rate; // NaN when not satisfied
        if (empirical_pairs > 0) {
            const Eigen::Vector2d eta =
                cert.satisfied ? cert.eta : Eigen::Vector2d::Ones().eval();
            std::vector<double> vals;
            for (const RateEstimate& r : pair_rates(local, empirical_pairs, eta))
                if (!r.saturated) vals.push_back(r.rate);
            if (!vals.empty()) {
                pt.empirical = median(vals);
                pt.has_empirical = true;
            }
        }
        points[i] = pt;
    };
    auto eval_guarded = [&](size_t i) {
        try {
            eval_point(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < grid.size(); ++i) eval_guarded(i);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (size_t i = static_cast<size_t>(w); i < grid.size();
                     i += static_cast<size_t>(jobs))
                    eval_guarded(i);
            });
        for (auto& t : workers) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return points;
}

int cmd_sweep(const RunConfig& cfg, const std::string& param, double a, double b,
              int steps, int jobs, int empirical_pairs, std::ostream& csv_out) {
    const std::vector<SweepPoint> points =
        run_sweep(cfg, param, a, b, steps, jobs, empirical_pairs);
    csv_out << param << ",satisfied,lambda";
    if (empirical_pairs > 0) csv_out << ",empirical_rate";
    csv_out << "\n";
    csv_out << std::setprecision(17);
    for (const SweepPoint& pt : points) {
        csv_out << pt.value << "," << (pt.satisfied ? 1 : 0) << ",";
        if (pt.satisfied) csv_out << pt.lambda;
        else csv_out << "nan";
        if (empirical_pairs > 0) {
            csv_out << ",";
            if (pt.has_empirical) csv_out << pt.empirical;
            else csv_out << "nan";
        }
        csv_out << "\n";
    }
    return kExitCertified;
}

} // namespace hebnet
