#include "csv_io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "levytail/errors.hpp"
#include "report.hpp"

namespace levytail::cli {

namespace {

bool parse_number(const std::string& token, double* out) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    if (*end != '\0') return false;
    *out = v;
    return true;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

std::vector<double> read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file: " + path);

    std::vector<double> times, values;
    std::string line;
    std::size_t line_no = 0;
    std::size_t n_cols = 0;
    bool header_checked = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto fields = split_fields(line);
        if (fields.size() != 1 && fields.size() != 2)
            throw DataError("csv: expected 1 or 2 columns at line " +
                            std::to_string(line_no));

        double parsed[2];
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i)
            numeric = numeric && parse_number(fields[i], &parsed[i]);

        if (!header_checked) {
            header_checked = true;
            n_cols = fields.size();
            if (!numeric) continue;  // header row
        } else if (!numeric) {
            throw DataError("csv: non-numeric data at line " + std::to_string(line_no));
        }
        if (fields.size() != n_cols)
            throw DataError("csv: inconsistent column count at line " +
                            std::to_string(line_no));

        if (n_cols == 2) {
            times.push_back(parsed[0]);
            values.push_back(parsed[1]);
        } else {
            values.push_back(parsed[0]);
        }
    }

    if (values.size() < 2) throw DataError("csv: need at least 2 samples");

    if (!times.empty()) {
        const double step = (times.back() - times.front()) /
                            static_cast<double>(times.size() - 1);
        if (!(step > 0.0)) throw DataError("csv: time column must be increasing");
        for (std::size_t i = 1; i < times.size(); ++i) {
            const double dt = times[i] - times[i - 1];
            if (std::fabs(dt - step) > 1e-9 * std::fabs(step))
                throw DataError("csv: time column not uniformly spaced (sample " +
                                std::to_string(i) + ")");
        }
    }
    return values;
}

void write_series_csv(const std::string& path, const std::vector<double>& values) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
    if (!out) throw IoError("cannot open output file: " + path);
    out << "value\n";
    for (double v : values) out << format_double(v) << "\n";
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace levytail::cli
