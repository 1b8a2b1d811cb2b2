#include "aqc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "aqc/csv.hpp"

namespace aqc {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::size_t column_index(const std::vector<std::string>& names, const std::string& wanted) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == wanted) return i;
  throw std::invalid_argument("unknown trace column '" + wanted + "'");
}

std::string coord(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string tick_label(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3g", value);
  return buffer;
}

}  // namespace

std::string render_trace_svg(int n_qubits, const std::vector<TraceRow>& rows,
                             const SvgOptions& options) {
  if (rows.empty()) throw std::invalid_argument("render_trace_svg: empty trace");
  if (options.columns.empty()) throw std::invalid_argument("render_trace_svg: no columns");
  const std::vector<std::string> names = trace_column_names(n_qubits);
  const std::size_t x_index = column_index(names, options.x_column);
  std::vector<std::size_t> y_indices;
  for (const std::string& column : options.columns)
    y_indices.push_back(column_index(names, column));

  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  bool first = true;
  for (const TraceRow& row : rows) {
    const double x = trace_column_value(row, n_qubits, x_index);
    x_min = first ? x : std::min(x_min, x);
    x_max = first ? x : std::max(x_max, x);
    for (std::size_t idx : y_indices) {
      const double y = trace_column_value(row, n_qubits, idx);
      if (!std::isfinite(y)) continue;
      y_min = first ? y : std::min(y_min, y);
      y_max = first ? y : std::max(y_max, y);
      first = false;
    }
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= y_min) y_max = y_min + 1.0;

  const double margin_left = 64, margin_right = 16, margin_top = 16, margin_bottom = 48;
  const double plot_w = options.width - margin_left - margin_right;
  const double plot_h = options.height - margin_top - margin_bottom;
  auto sx = [&](double x) { return margin_left + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) {
    return margin_top + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes with four ticks per side
  out << "<g stroke=\"#333\" stroke-width=\"1\" fill=\"none\">\n";
  out << "<line x1=\"" << coord(margin_left) << "\" y1=\"" << coord(margin_top + plot_h)
      << "\" x2=\"" << coord(margin_left + plot_w) << "\" y2=\"" << coord(margin_top + plot_h)
      << "\"/>\n";
  out << "<line x1=\"" << coord(margin_left) << "\" y1=\"" << coord(margin_top) << "\" x2=\""
      << coord(margin_left) << "\" y2=\"" << coord(margin_top + plot_h) << "\"/>\n";
  out << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = x_min + (x_max - x_min) * t / 4.0;
    const double fy = y_min + (y_max - y_min) * t / 4.0;
    out << "<text x=\"" << coord(sx(fx)) << "\" y=\"" << coord(margin_top + plot_h + 18)
        << "\" text-anchor=\"middle\">" << tick_label(fx) << "</text>\n";
    out << "<text x=\"" << coord(margin_left - 8) << "\" y=\"" << coord(sy(fy) + 4)
        << "\" text-anchor=\"end\">" << tick_label(fy) << "</text>\n";
  }
  out << "<text x=\"" << coord(margin_left + plot_w / 2) << "\" y=\""
      << coord(margin_top + plot_h + 38) << "\" text-anchor=\"middle\">" << options.x_column
      << "</text>\n";
  out << "</g>\n";

  for (std::size_t c = 0; c < y_indices.size(); ++c) {
    const char* color = kPalette[c % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool first_point = true;
    for (const TraceRow& row : rows) {
      const double y = trace_column_value(row, n_qubits, y_indices[c]);
      if (!std::isfinite(y)) continue;
      if (!first_point) out << ' ';
      out << coord(sx(trace_column_value(row, n_qubits, x_index))) << ',' << coord(sy(y));
      first_point = false;
    }
    out << "\"/>\n";
    out << "<text font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\" x=\""
        << coord(margin_left + 8) << "\" y=\"" << coord(margin_top + 14 + 16.0 * double(c))
        << "\">" << options.columns[c] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace aqc
