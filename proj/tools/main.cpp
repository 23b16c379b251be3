#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hebnet/commands.hpp"

namespace {

// "a:b:steps" -> endpoints + point count
void parse_range(const std::string& text, double& a, double& b, int& steps) {
    const size_t c1 = text.find(':');
    const size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw hebnet::ConfigError("range must be a:b:steps, got '" + text + "'");
    try {
        a = std::stod(text.substr(0, c1));
        b = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        steps = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw hebnet::ConfigError("range must be a:b:steps, got '" + text + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled neural-synaptic network simulator and contraction certificates"};
    app.require_subcommand(1);

    std::string config_path, out_path, gnuplot_path, param, range;
    int pairs = 10, jobs = 1, empirical_pairs = 0;

    CLI::App* check = app.add_subcommand("check", "evaluate the contraction certificate");
    check->add_option("config", config_path, "config file")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "integrate and run the monitors");
    simulate->add_option("config", config_path, "config file")->required();
    simulate->add_option("--out", out_path, "trajectory CSV path");
    simulate->add_option("--gnuplot", gnuplot_path, "write a gnuplot script for the CSV");

    CLI::App* rate = app.add_subcommand("rate", "empirical contraction rate over trajectory pairs");
    rate->add_option("config", config_path, "config file")->required();
    rate->add_option("--pairs", pairs, "number of trajectory pairs")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "certificate over a parameter grid");
    sweep->add_option("config", config_path, "config file")->required();
    sweep->add_option("--param", param, "c_n, c_s, c_o, h-scale or ubar-scale")->required();
    sweep->add_option("--range", range, "a:b:steps")->required();
    sweep->add_option("--jobs", jobs, "parallel workers");
    sweep->add_option("--empirical-pairs", empirical_pairs,
                      "also estimate the empirical rate from this many pairs");
    sweep->add_option("--out", out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hebnet::kExitUsage;
    }

    try {
        const hebnet::RunConfig cfg = hebnet::load_config(config_path);
        if (check->parsed()) return hebnet::cmd_check(cfg, std::cout);
        if (simulate->parsed()) {
            if (!gnuplot_path.empty() && out_path.empty()) {
                std::cerr << "error: --gnuplot needs --out so the script has data to plot\n";
                return hebnet::kExitUsage;
            }
            const int code = hebnet::cmd_simulate(cfg, out_path, std::cout);
            if (!gnuplot_path.empty()) {
                std::ofstream gp(gnuplot_path);
                if (!gp) throw hebnet::ConfigError("cannot open '" + gnuplot_path + "'");
                hebnet::write_gnuplot_script(cfg, out_path, gp);
            }
            return code;
        }
        if (rate->parsed()) {
            if (pairs < 1) {
                std::cerr << "error: --pairs must be at least 1\n";
                return hebnet::kExitUsage;
            }
            return hebnet::cmd_rate(cfg, pairs, std::cout);
        }
        if (sweep->parsed()) {
            double a = 0.0, b = 0.0;
            int steps = 0;
            parse_range(range, a, b, steps);
            if (!out_path.empty()) {
                std::ofstream csv(out_path);
                if (!csv) throw hebnet::ConfigError("cannot open '" + out_path + "'");
                return hebnet::cmd_sweep(cfg, param, a, b, steps, jobs, empirical_pairs, csv);
            }
            return hebnet::cmd_sweep(cfg, param, a, b, steps, jobs, empirical_pairs,
                                     std::cout);
        }
    } catch (const hebnet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hebnet::kExitUsage;
    }
    return hebnet::kExitUsage;
}
