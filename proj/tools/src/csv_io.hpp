#ifndef LEVYTAIL_TOOLS_CSV_IO_HPP
#define LEVYTAIL_TOOLS_CSV_IO_HPP

#include <string>
#include <vector>

namespace levytail::cli {

/// Reads a series from CSV: either one numeric column (values) or two
/// columns (time, value). A header row is detected and skipped. A time
/// column must be uniformly spaced to 1e-9 relative accuracy.
/// Throws IoError if the file cannot be opened, DataError on malformed or
/// non-uniform content.
std::vector<double> read_series_csv(const std::string& path);

/// Writes one `value` column, LF line endings, 17 significant digits.
/// Throws IoError when the file cannot be written.
void write_series_csv(const std::string& path, const std::vector<double>& values);

}  // namespace levytail::cli

#endif
