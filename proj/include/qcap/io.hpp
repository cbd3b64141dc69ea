#pragma once

#include <string>
#include <vector>

namespace qcap {

/// Column-oriented numeric table; the CSV and SVG interchange format.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Deterministic CSV bytes: comma separators, 9-decimal fixed notation,
/// LF line endings, no trailing separator.
std::string format_csv(const CsvTable& table);

CsvTable parse_csv(const std::string& text);

/// Throws std::runtime_error when the path cannot be written.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Minimal self-contained SVG: axes, one polyline per value column (the
/// first column is the abscissa), legend by column name. Deterministic
/// bytes for fixed input.
std::string render_svg(const CsvTable& table);

}  // namespace qcap
