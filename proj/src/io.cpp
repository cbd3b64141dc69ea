#include "qcap/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qcap {

namespace {

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

}  // namespace

std::string format_csv(const CsvTable& table) {
  if (table.columns.empty()) throw std::invalid_argument("format_csv: no columns");
  std::string out;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("format_csv: row width mismatch");
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_value(row[c]);
    }
    out += '\n';
  }
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    if (header) {
      while (std::getline(fields, field, ',')) table.columns.push_back(field);
      header = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(fields, field, ',')) row.push_back(std::stod(field));
    if (row.size() != table.columns.size())
      throw std::runtime_error("parse_csv: ragged row");
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw std::runtime_error("parse_csv: empty input");
  return table;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

namespace {

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

std::string render_svg(const CsvTable& table) {
  if (table.columns.size() < 2 || table.rows.empty())
    throw std::invalid_argument("render_svg: need an abscissa column, at least one curve, and data");

  const double width = 720, height = 480;
  const double ml = 70, mr = 170, mt = 30, mb = 50;  // margins
  const double pw = width - ml - mr, ph = height - mt - mb;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& row : table.rows) {
    xmin = std::min(xmin, row[0]);
    xmax = std::max(xmax, row[0]);
    for (size_t c = 1; c < row.size(); ++c) {
      ymin = std::min(ymin, row[c]);
      ymax = std::max(ymax, row[c]);
    }
  }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  auto sx = [&](double x) { return ml + pw * (x - xmin) / (xmax - xmin); };
  auto sy = [&](double y) { return mt + ph * (ymax - y) / (ymax - ymin); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
         "viewBox=\"0 0 720 480\">\n";
  svg += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  // axes box
  svg += "<rect x=\"" + fmt2(ml) + "\" y=\"" + fmt2(mt) + "\" width=\"" + fmt2(pw) +
         "\" height=\"" + fmt2(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  // zero line when visible
  if (ymin < 0.0 && ymax > 0.0)
    svg += "<line x1=\"" + fmt2(ml) + "\" y1=\"" + fmt2(sy(0)) + "\" x2=\"" +
           fmt2(ml + pw) + "\" y2=\"" + fmt2(sy(0)) +
           "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
  // axis labels
  svg += "<text x=\"" + fmt2(ml) + "\" y=\"" + fmt2(height - 15) +
         "\" font-size=\"12\">" + fmt2(xmin) + "</text>\n";
  svg += "<text x=\"" + fmt2(ml + pw - 30) + "\" y=\"" + fmt2(height - 15) +
         "\" font-size=\"12\">" + fmt2(xmax) + "</text>\n";
  svg += "<text x=\"10\" y=\"" + fmt2(mt + 10) + "\" font-size=\"12\">" + fmt2(ymax) +
         "</text>\n";
  svg += "<text x=\"10\" y=\"" + fmt2(mt + ph) + "\" font-size=\"12\">" + fmt2(ymin) +
         "</text>\n";
  svg += "<text x=\"" + fmt2(ml + pw / 2 - 10) + "\" y=\"" + fmt2(height - 15) +
         "\" font-size=\"12\">" + table.columns[0] + "</text>\n";

  for (size_t c = 1; c < table.columns.size(); ++c) {
    const char* color = kPalette[(c - 1) % 8];
    std::string points;
    for (const auto& row : table.rows) {
      if (!points.empty()) points += ' ';
      points += fmt2(sx(row[0])) + "," + fmt2(sy(row[c]));
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    const double ly = mt + 18.0 * static_cast<double>(c);
    svg += "<line x1=\"" + fmt2(width - mr + 10) + "\" y1=\"" + fmt2(ly) + "\" x2=\"" +
           fmt2(width - mr + 34) + "\" y2=\"" + fmt2(ly) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + fmt2(width - mr + 40) + "\" y=\"" + fmt2(ly + 4) +
           "\" font-size=\"12\">" + table.columns[c] + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace qcap
