#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hebnet/config.hpp"

namespace hebnet {

/// Exit codes of the CLI: 0 certified / success, 1 certificate not
/// satisfied, 2 invalid input (the CLI maps thrown errors to 2).
inline constexpr int kExitCertified = 0;
inline constexpr int kExitNotCertified = 1;
inline constexpr int kExitUsage = 2;

/// Prints the majorant, the condition, the rate and the norm weights.
/// Returns 0 when the certificate is satisfied, 1 otherwise.
int cmd_check(const RunConfig& cfg, std::ostream& out);

/// Integrates the configured run (delayed mode when tau > 0), runs the
/// invariance/Dale monitors (and the entrainment check when a period is
/// configured), writes the trajectory CSV to csv_path (skipped when empty)
/// and a summary to `out`. Returns 0.
int cmd_simulate(const RunConfig& cfg, const std::string& csv_path, std::ostream& out);

/// Writes a gnuplot script that plots the CSV produced by cmd_simulate.
void write_gnuplot_script(const RunConfig& cfg, const std::string& csv_path,
                          std::ostream& out);

/// Runs `pairs` trajectory pairs from random initial conditions, prints the
/// per-pair empirical rates, their min/median and the analytic rate.
/// Returns 0; requires pairs >= 1.
int cmd_rate(const RunConfig& cfg, int pairs, std::ostream& out);

struct SweepPoint {
    double value = 0.0;
    bool satisfied = false;
    double lambda = 0.0;    ///< NaN when not satisfied
    double empirical = 0.0; ///< median empirical rate; only when requested
    bool has_empirical = false;
};

/// Evaluates the certificate (and optionally the empirical rate) on a
/// uniform grid of `steps` values of `param` in [a, b]. Supported params:
/// c_n, c_s, c_o, h-scale, ubar-scale. Grid points are independent; rows
/// come back in grid order regardless of `jobs`.
std::vector<SweepPoint> run_sweep(const RunConfig& cfg, const std::string& param,
                                  double a, double b, int steps, int jobs,
                                  int empirical_pairs);

/// run_sweep + CSV emission (header: <param>,satisfied,lambda[,empirical_rate]).
int cmd_sweep(const RunConfig& cfg, const std::string& param, double a, double b,
              int steps, int jobs, int empirical_pairs, std::ostream& csv_out);

} // namespace hebnet
