#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "levytail/errors.hpp"
#include "commands.hpp"

namespace {

using levytail::cli::Report;
using levytail::cli::RunConfig;

// exit codes: 0 ok, 1 requested check failed, 2 I/O, 3 data/numeric, 4 parameters
constexpr int kExitCheckFailed = 1;
constexpr int kExitIo = 2;
constexpr int kExitData = 3;
constexpr int kExitParams = 4;

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--input", cfg.input_path, "CSV series (one value column or time,value)");
    cmd->add_option("--gen", cfg.generator, "generate the input: fbm|walk|noise|stable");
    cmd->add_option("--n", cfg.gen_n, "generated series length");
    cmd->add_option("--h", cfg.gen_h, "Hurst exponent for --gen fbm");
    cmd->add_option("--seed", cfg.seed, "generator seed");
}

void add_stable_options(CLI::App* cmd, RunConfig& cfg) {
    auto* alpha = cmd->add_option("--alpha", cfg.alpha, "stable tail exponent in (0, 2]");
    auto* gamma = cmd->add_option("--gamma", cfg.gamma, "scale (default: standardized)");
    cmd->add_option("--beta", cfg.beta, "skewness in [-1, 1]");
    cmd->add_option("--sigma", cfg.sigma, "location");
    alpha->each([&cfg](const std::string&) { cfg.has_alpha = true; });
    gamma->each([&cfg](const std::string&) { cfg.has_gamma = true; });
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "report format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", cfg.output_path, "write the report to this path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heavy-tailed time-series toolkit: stable characteristic functions,\n"
                 "tail probabilities, Hurst exponents and box-counting dimensions"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keeps --h free for the Hurst target

    RunConfig cfg;

    auto* hurst = app.add_subcommand("hurst", "estimate the Hurst exponent by range scaling");
    hurst->set_help_flag("--help", "print help");
    add_input_options(hurst, cfg);
    add_stable_options(hurst, cfg);
    hurst->add_option("--windows", cfg.windows, "window lengths (samples)")->delimiter(',');
    hurst->add_option("--plot-points", cfg.plot_points_path, "write log-log points here");
    add_output_options(hurst, cfg);

    auto* boxdim = app.add_subcommand("boxdim", "estimate the box-counting dimension");
    boxdim->set_help_flag("--help", "print help");
    add_input_options(boxdim, cfg);
    add_stable_options(boxdim, cfg);
    boxdim->add_option("--deltas", cfg.deltas, "box side lengths (powers of 1/2)")->delimiter(',');
    boxdim->add_option("--plot-points", cfg.plot_points_path, "write log-log points here");
    add_output_options(boxdim, cfg);

    auto* table = app.add_subcommand("table", "normal-vs-stable tail probability table");
    table->set_help_flag("--help", "print help");
    add_stable_options(table, cfg);
    table->add_option("--x", cfg.xs, "x values (default -10..-1)")->delimiter(',');
    add_output_options(table, cfg);

    auto* simulate = app.add_subcommand("simulate", "generate a series and write it to CSV");
    simulate->set_help_flag("--help", "print help");
    add_input_options(simulate, cfg);
    add_stable_options(simulate, cfg);
    simulate->add_option("--output", cfg.output_path, "series destination (CSV)")->required();
    simulate->add_option("--format", cfg.format, "report format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* check = app.add_subcommand("check", "verify stability / semi-stability identities");
    check->set_help_flag("--help", "print help");
    add_stable_options(check, cfg);
    check->add_option("--a-values", cfg.a_values, "scaling factors (default 0.5,2,3)")
        ->delimiter(',');
    check->add_option("--tol", cfg.stability_tol, "stability tolerance");
    auto* semi_base = check->add_option("--semi-base", cfg.semi_base, "semi-stable base b > 1");
    check->add_option("--semi-alpha", cfg.semi_alpha, "semi-stable exponent in (0, 2)");
    check->add_option("--semi-atom", cfg.semi_atom, "atom location x0 != 0");
    check->add_option("--semi-trunc", cfg.semi_truncation, "series truncation (default: auto)");
    check->add_option("--semi-tol", cfg.semi_tol, "semi-stable tolerance");
    semi_base->each([&cfg](const std::string&) { cfg.has_semistable = true; });
    add_output_options(check, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        Report report;
        bool table_to_stdout = false;
        if (hurst->parsed()) {
            report = levytail::cli::cmd_hurst(cfg);
        } else if (boxdim->parsed()) {
            report = levytail::cli::cmd_boxdim(cfg);
        } else if (table->parsed()) {
            report = levytail::cli::cmd_table(cfg);
            table_to_stdout = true;
        } else if (simulate->parsed()) {
            report = levytail::cli::cmd_simulate(cfg);
            cfg.output_path.clear();  // --output was the series file, not the report
        } else {
            report = levytail::cli::cmd_check(cfg);
        }

        const std::string rendered = levytail::cli::emit_report(cfg, report);
        if (table_to_stdout) {
            std::cout << levytail::cli::format_tail_table(report);
            if (!cfg.output_path.empty()) levytail::cli::log_info("report written");
        } else {
            std::cout << rendered;
        }
        for (const auto& w : report.warnings) std::cerr << "levytail: warning: " << w << "\n";

        if (!report.all_passed) {
            std::cerr << "levytail: one or more checks FAILED\n";
            return kExitCheckFailed;
        }
        return 0;
    } catch (const levytail::IoError& e) {
        std::cerr << "levytail: I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const levytail::ParameterError& e) {
        std::cerr << "levytail: parameter error: " << e.what() << "\n";
        return kExitParams;
    } catch (const levytail::AccuracyError& e) {
        std::cerr << "levytail: accuracy error: " << e.what()
                  << " (requested " << e.requested() << ", achieved " << e.achieved() << ")\n";
        return kExitData;
    } catch (const levytail::Error& e) {
        std::cerr << "levytail: error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "levytail: error: " << e.what() << "\n";
        return kExitData;
    }
}
