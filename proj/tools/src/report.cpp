#include "report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace levytail::cli {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

nlohmann::ordered_json report_json(const Report& report) {
    nlohmann::ordered_json j;
    j["command"] = report.command;
    j["timestamp"] = report.timestamp;
    j["warnings"] = report.warnings;
    j["result"] = report.result;
    j["all_passed"] = report.all_passed;
    return j;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void flatten(const nlohmann::ordered_json& node, const std::string& path,
             std::string& out) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (node.type()) {
        case value_t::object:
            for (const auto& [key, child] : node.items())
                flatten(child, path.empty() ? key : path + "." + key, out);
            break;
        case value_t::array: {
            std::size_t i = 0;
            for (const auto& child : node)
                flatten(child, path + "." + std::to_string(i++), out);
            break;
        }
        case value_t::number_float:
            out += path + "," + format_double(node.get<double>()) + "\n";
            break;
        case value_t::number_integer:
        case value_t::number_unsigned:
        case value_t::boolean:
        case value_t::null:
            out += path + "," + node.dump() + "\n";
            break;
        case value_t::string:
            out += path + "," + csv_quote(node.get<std::string>()) + "\n";
            break;
        default:
            break;
    }
}

}  // namespace

std::string render_json(const Report& report) {
    return report_json(report).dump(2) + "\n";
}

std::string render_csv(const Report& report) {
    std::string out = "key,value\n";
    flatten(report_json(report), "", out);
    return out;
}

}  // namespace levytail::cli
