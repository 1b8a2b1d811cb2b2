#pragma once

// Minimal static SVG plots of trace columns: axes, ticks, one polyline per
// selected column.

#include <string>
#include <vector>

#include "aqc/trace.hpp"

namespace aqc {

struct SvgOptions {
  std::vector<std::string> columns{"entropy_max", "F", "G"};
  std::string x_column = "s";  // any trace column, typically "s" or "t_opt"
  int width = 900;
  int height = 540;
};

std::string render_trace_svg(int n_qubits, const std::vector<TraceRow>& rows,
                             const SvgOptions& options = {});

}  // namespace aqc
