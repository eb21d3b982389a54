#ifndef LEVYTAIL_TOOLS_REPORT_HPP
#define LEVYTAIL_TOOLS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace levytail::cli {

/// Run report: command echo, UTC timestamp, warnings and a result block.
/// The content is held as ordered JSON; the CSV rendering is a flattened
/// view of the same tree, so both formats carry identical numbers.
struct Report {
    std::string command;
    std::string timestamp;
    std::vector<std::string> warnings;
    nlohmann::ordered_json result;

    /// True unless a requested check (stability / semi-stability) failed.
    bool all_passed = true;
};

/// Current time as an ISO-8601 UTC string.
std::string utc_timestamp();

/// Full JSON rendering (one top-level object).
std::string render_json(const Report& report);

/// Flat CSV rendering: one `path,value` row per leaf, arrays indexed
/// numerically. Numbers are printed with 17 significant digits in both
/// renderings.
std::string render_csv(const Report& report);

/// %.17g formatting used for all numbers emitted in reports and series files.
std::string format_double(double v);

}  // namespace levytail::cli

#endif
