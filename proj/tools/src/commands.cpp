#include "commands.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "levytail/errors.hpp"
#include "levytail/fractal.hpp"
#include "levytail/scaling.hpp"
#include "levytail/special.hpp"
#include "levytail/stable.hpp"
#include "levytail/synth.hpp"
#include "levytail/time_series.hpp"
#include "csv_io.hpp"

namespace levytail::cli {

namespace {

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("LEVYTAIL_LOG");
        if (!env) return 0;
        const std::string v(env);
        if (v == "debug") return 2;
        if (v == "info") return 1;
        return 0;
    }();
    return level;
}

StableParams stable_params(const RunConfig& cfg) {
    if (!cfg.has_alpha) throw ParameterError("stable parameters required: pass --alpha");
    StableParams p{cfg.alpha, cfg.beta,
                   cfg.has_gamma ? cfg.gamma : StableParams::standardized_gamma(cfg.alpha),
                   cfg.sigma};
    p.validate();
    return p;
}

TimeSeries load_series(const RunConfig& cfg, Report& report) {
    if (!cfg.input_path.empty() && !cfg.generator.empty())
        throw ParameterError("use either --input or --gen, not both");

    if (!cfg.input_path.empty()) {
        log_info("reading series from " + cfg.input_path);
        return TimeSeries(read_series_csv(cfg.input_path));
    }
    if (cfg.generator.empty())
        throw ParameterError("no input: pass --input PATH or --gen NAME");

    log_info("generating '" + cfg.generator + "' series, n=" + std::to_string(cfg.gen_n) +
             ", seed=" + std::to_string(cfg.seed));
    if (cfg.generator == "noise") return gaussian_noise(cfg.gen_n, cfg.seed);
    if (cfg.generator == "walk") return gaussian_walk(cfg.gen_n, cfg.seed);
    if (cfg.generator == "fbm") {
        auto result = fbm(FbmSpec{cfg.gen_n, cfg.gen_h}, cfg.seed);
        if (result.eigenvalues_clipped)
            report.warnings.push_back("fbm embedding clipped negative eigenvalues");
        return std::move(result.series);
    }
    if (cfg.generator == "stable") return stable_sample(stable_params(cfg), cfg.gen_n, cfg.seed);
    throw ParameterError("unknown generator '" + cfg.generator +
                         "' (expected fbm|walk|noise|stable)");
}

void require_length(const TimeSeries& series) {
    if (series.size() < 64)
        throw DataError("series too short: need at least 64 samples, got " +
                        std::to_string(series.size()));
}

WindowPlan window_plan(const RunConfig& cfg, std::size_t n) {
    if (cfg.windows.empty()) return WindowPlan::default_for(n);
    WindowPlan plan{cfg.windows};
    plan.validate(n);
    return plan;
}

BoxGridConfig box_grid(const RunConfig& cfg, std::size_t n) {
    if (cfg.deltas.empty()) return BoxGridConfig::default_for(n);
    BoxGridConfig grid{cfg.deltas};
    grid.validate(n);
    return grid;
}

void write_plot_points(const std::string& path,
                       const std::vector<std::pair<double, double>>& pts,
                       const std::string& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open plot-points file: " + path);
    out << header << "\n";
    for (const auto& [x, y] : pts)
        out << format_double(x) << "," << format_double(y) << "\n";
    if (!out) throw IoError("failed writing " + path);
}

std::string describe(const RunConfig& cfg, const std::string& name) {
    std::string s = name;
    if (!cfg.input_path.empty()) s += " --input " + cfg.input_path;
    if (!cfg.generator.empty()) s += " --gen " + cfg.generator;
    return s;
}

}  // namespace

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "levytail: [info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "levytail: [debug] " << msg << "\n";
}

Report cmd_hurst(const RunConfig& cfg) {
    Report report;
    report.command = describe(cfg, "hurst");
    report.timestamp = utc_timestamp();

    const TimeSeries series = load_series(cfg, report);
    require_length(series);

    const auto plan = window_plan(cfg, series.size());
    log_debug("window plan: " + std::to_string(plan.windows.size()) + " lengths, " +
              std::to_string(plan.windows.front()) + ".." + std::to_string(plan.windows.back()));
    const auto curve = scaling_curve(series, plan);
    for (int w : curve.excluded_windows)
        report.warnings.push_back("window " + std::to_string(w) +
                                  " had zero range and was excluded");
    const auto est = fit_hurst(curve.points);

    nlohmann::ordered_json r;
    r["n"] = series.size();
    r["hurst"] = {{"h", est.h},
                  {"c", est.c},
                  {"ci95_low", est.ci95_low},
                  {"ci95_high", est.ci95_high},
                  {"r_squared", est.r_squared}};
    if (est.h > 0.0) {
        const auto alpha = alpha_from_hurst(est.h);
        r["alpha"] = {{"value", alpha.alpha}, {"raw", alpha.raw}, {"clamped", alpha.clamped}};
        if (alpha.clamped)
            report.warnings.push_back("1/H exceeds 2; alpha clamped to the stable range");
    } else {
        r["alpha"] = nullptr;
        report.warnings.push_back("estimated H is not positive; alpha undefined");
    }
    r["trace_dimension"] = 2.0 - est.h;

    std::vector<std::pair<double, double>> pts;
    auto points = nlohmann::ordered_json::array();
    for (const auto& pt : est.points) {
        const double lx = std::log(static_cast<double>(pt.window));
        const double ly = std::log(pt.mean_range);
        points.push_back({{"window", pt.window},
                          {"mean_range", pt.mean_range},
                          {"log_window", lx},
                          {"log_mean_range", ly}});
        pts.emplace_back(lx, ly);
    }
    r["points"] = std::move(points);
    report.result = std::move(r);

    if (!cfg.plot_points_path.empty())
        write_plot_points(cfg.plot_points_path, pts, "log_window,log_mean_range");
    return report;
}

Report cmd_boxdim(const RunConfig& cfg) {
    Report report;
    report.command = describe(cfg, "boxdim");
    report.timestamp = utc_timestamp();

    const TimeSeries series = load_series(cfg, report);
    require_length(series);

    const auto grid = box_grid(cfg, series.size());
    log_debug("box grid: " + std::to_string(grid.deltas.size()) + " sizes down to " +
              format_double(grid.deltas.back()));
    const auto est = box_dimension(series, grid);
    if (est.degenerate)
        report.warnings.push_back("constant series: box dimension is 1 by convention");

    nlohmann::ordered_json r;
    r["n"] = series.size();
    r["boxdim"] = {{"d_b", est.d_b},
                   {"r_squared", est.r_squared},
                   {"v_star", est.v_star},
                   {"degenerate", est.degenerate}};
    r["implied_h"] = 2.0 - est.d_b;

    std::vector<std::pair<double, double>> pts;
    auto counts = nlohmann::ordered_json::array();
    for (const auto& bc : est.counts) {
        const double lx = std::log(1.0 / bc.delta);
        const double ly = std::log(static_cast<double>(bc.count));
        counts.push_back({{"delta", bc.delta},
                          {"count", bc.count},
                          {"log_inv_delta", lx},
                          {"log_count", ly}});
        pts.emplace_back(lx, ly);
    }
    r["counts"] = std::move(counts);
    report.result = std::move(r);

    if (!cfg.plot_points_path.empty())
        write_plot_points(cfg.plot_points_path, pts, "log_inv_delta,log_count");
    return report;
}

Report cmd_table(const RunConfig& cfg) {
    Report report;
    report.command = describe(cfg, "table");
    report.timestamp = utc_timestamp();

    const auto p = stable_params(cfg);
    std::vector<double> xs = cfg.xs;
    if (xs.empty())
        for (int x = -10; x <= -1; ++x) xs.push_back(x);

    const auto rows = tail_table(p, xs);

    nlohmann::ordered_json r;
    r["params"] = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"sigma", p.sigma}};
    auto jrows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json jr = {{"x", row.x},
                                     {"p_normal", row.p_normal},
                                     {"p_stable", row.p_stable}};
        if (std::isinf(row.ratio)) {
            jr["ratio"] = nullptr;
            jr["ratio_overflow"] = true;
        } else {
            jr["ratio"] = row.ratio;
        }
        jrows.push_back(std::move(jr));
    }
    r["rows"] = std::move(jrows);
    report.result = std::move(r);
    return report;
}

std::string format_tail_table(const Report& report) {
    std::ostringstream out;
    char buf[64];
    out << "      x          P[Normal]           P[Levy]  Ratio Levy/Normal\n";
    for (const auto& row : report.result.at("rows")) {
        std::snprintf(buf, sizeof(buf), "%7g", row.at("x").get<double>());
        out << buf;
        std::snprintf(buf, sizeof(buf), "  %16.6E", row.at("p_normal").get<double>());
        out << buf;
        std::snprintf(buf, sizeof(buf), "  %16.6E", row.at("p_stable").get<double>());
        out << buf;
        if (row.contains("ratio_overflow")) {
            out << "  inf";
        } else {
            std::snprintf(buf, sizeof(buf), "  %.8G", row.at("ratio").get<double>());
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

Report cmd_simulate(const RunConfig& cfg) {
    Report report;
    report.command = describe(cfg, "simulate");
    report.timestamp = utc_timestamp();

    if (cfg.generator.empty())
        throw ParameterError("simulate: pass --gen fbm|walk|noise|stable");
    if (cfg.output_path.empty())
        throw ParameterError("simulate: pass --output PATH for the series file");

    RunConfig gen_cfg = cfg;
    gen_cfg.input_path.clear();
    const TimeSeries series = load_series(gen_cfg, report);
    write_series_csv(cfg.output_path, series.values());

    nlohmann::ordered_json r;
    r["generator"] = cfg.generator;
    r["n"] = series.size();
    r["seed"] = cfg.seed;
    if (cfg.generator == "fbm") r["h"] = cfg.gen_h;
    if (cfg.generator == "stable") {
        const auto p = stable_params(cfg);
        r["params"] = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"sigma", p.sigma}};
    }
    r["path"] = cfg.output_path;
    report.result = std::move(r);
    return report;
}

Report cmd_check(const RunConfig& cfg) {
    Report report;
    report.command = describe(cfg, "check");
    report.timestamp = utc_timestamp();

    nlohmann::ordered_json r;
    bool ran_anything = false;

    if (cfg.has_alpha) {
        ran_anything = true;
        const auto p = stable_params(cfg);
        r["params"] = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"sigma", p.sigma}};
        r["z_grid"] = stability_z_grid();
        std::vector<double> a_values = cfg.a_values;
        if (a_values.empty()) a_values = {0.5, 2.0, 3.0};

        auto checks = nlohmann::ordered_json::array();
        for (double a : a_values) {
            const auto rep = check_stability(p, a, cfg.stability_tol);
            checks.push_back({{"a", rep.a},
                              {"b", rep.b_used},
                              {"c", rep.c_used},
                              {"max_modulus_error", rep.max_modulus_error},
                              {"passed", rep.passed}});
            report.all_passed = report.all_passed && rep.passed;
        }
        r["stability"] = {{"tolerance", cfg.stability_tol}, {"checks", std::move(checks)}};
    }

    if (cfg.has_semistable) {
        ran_anything = true;
        const double z_max = stability_z_grid().back() * cfg.semi_base;
        const int trunc = cfg.semi_truncation > 0
                              ? cfg.semi_truncation
                              : choose_truncation(cfg.semi_base, cfg.semi_alpha,
                                                  cfg.semi_atom, z_max);
        const SemiStableSpec spec{cfg.semi_base, cfg.semi_alpha, cfg.semi_atom, trunc};
        const double a = std::pow(spec.base, spec.alpha);
        const double c = semistable_translation(spec);

        double max_err = 0.0, max_bound = 0.0;
        for (double z : stability_z_grid()) {
            const auto lhs = semistable_cf(spec, z);
            const auto rhs = semistable_cf(spec, spec.base * z);
            const auto rotated =
                rhs.value * std::exp(std::complex<double>(0.0, c * z));
            max_err = std::max(max_err, std::abs(std::pow(lhs.value, a) - rotated));
            max_bound = std::max({max_bound, lhs.truncation_bound, rhs.truncation_bound});
        }
        const bool passed = max_err <= cfg.semi_tol;
        if (max_bound > cfg.semi_tol)
            report.warnings.push_back("semi-stable truncation bound above tolerance");
        report.all_passed = report.all_passed && passed;

        r["semistable"] = {{"base", spec.base},
                           {"alpha", spec.alpha},
                           {"atom", spec.atom},
                           {"truncation", spec.truncation},
                           {"a", a},
                           {"translation", c},
                           {"max_modulus_error", max_err},
                           {"truncation_bound", max_bound},
                           {"tolerance", cfg.semi_tol},
                           {"passed", passed}};
    }

    if (!ran_anything)
        throw ParameterError("check: pass --alpha ... and/or --semi-base ...");

    report.result = std::move(r);
    return report;
}

std::string emit_report(const RunConfig& cfg, const Report& report) {
    const std::string rendered =
        (cfg.format == "json") ? render_json(report) : render_csv(report);
    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw IoError("cannot open output file: " + cfg.output_path);
        out << rendered;
        if (!out) throw IoError("failed writing " + cfg.output_path);
    }
    return rendered;
}

}  // namespace levytail::cli
