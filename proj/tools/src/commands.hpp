#ifndef LEVYTAIL_TOOLS_COMMANDS_HPP
#define LEVYTAIL_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace levytail::cli {

/// Everything a subcommand run needs. Exactly one input source (file or
/// generator) may be set for the series-based commands.
struct RunConfig {
    // input
    std::string input_path;
    std::string generator;  ///< fbm | walk | noise | stable
    std::size_t gen_n = 16384;
    double gen_h = 0.7;

    // stable parameters (table/check/simulate --gen stable)
    bool has_alpha = false;
    double alpha = 2.0;
    double beta = 0.0;
    bool has_gamma = false;
    double gamma = 1.0;  ///< defaults to the standardized scale for alpha
    double sigma = 0.0;

    // estimator overrides
    std::vector<int> windows;     ///< empty: default plan
    std::vector<double> deltas;   ///< empty: default grid
    std::vector<double> xs;       ///< table x values; empty: -10..-1

    std::uint64_t seed = 1;
    std::string format = "csv";   ///< csv | json
    std::string output_path;      ///< report destination ("" = stdout only)
    std::string plot_points_path; ///< log-log points for plotting

    // check
    std::vector<double> a_values;       ///< empty: {0.5, 2, 3}
    double stability_tol = 1e-10;
    bool has_semistable = false;
    double semi_base = 2.0;
    double semi_alpha = 1.0;
    double semi_atom = 1.0;
    int semi_truncation = 0;  ///< 0: chosen from the remainder bound
    double semi_tol = 1e-8;
};

Report cmd_hurst(const RunConfig& cfg);
Report cmd_boxdim(const RunConfig& cfg);
Report cmd_table(const RunConfig& cfg);
Report cmd_simulate(const RunConfig& cfg);
Report cmd_check(const RunConfig& cfg);

/// Renders the report in cfg.format, writes it to cfg.output_path when set.
/// Returns the rendering.
std::string emit_report(const RunConfig& cfg, const Report& report);

/// Table-1 style fixed-layout rendering of a table report for stdout.
std::string format_tail_table(const Report& report);

/// LEVYTAIL_LOG=off|info|debug (default off); messages go to stderr.
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace levytail::cli

#endif
