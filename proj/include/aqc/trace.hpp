#pragma once

// Full diagnostic sweeps over the schedule grid: per-sample spectra,
// entropies, geometric distances, and the runtime tables with their ordering
// correlations.

#include <optional>
#include <string>
#include <vector>

#include "aqc/algorithms.hpp"
#include "aqc/entanglement.hpp"
#include "aqc/schedule.hpp"

namespace aqc {

struct TraceRow {
  double s = 0.0;
  double t_optimized = 0.0;
  double e_minus = 0.0;
  double e_plus = 0.0;
  double gap = 0.0;
  double m_abs = 0.0;
  std::vector<double> entropy;  // one column per kept qubit
  double entropy_max = 0.0;
  double d_normalized = 0.0;
  double d_unnormalized = 0.0;
  double d_hilbert_schmidt = 0.0;
  double f_value = 0.0;
  double g_value = 0.0;
  double df_ds = 0.0;  // centered difference, one-sided at the endpoints
};

struct TraceOptions {
  double epsilon = 0.01;
  int grid_points = 20001;
  // Closest-product distances are the expensive columns; the runtime tables
  // skip them and leave the d_* columns NaN.
  bool geometric = true;
};

std::vector<TraceRow> run_trace(const ProblemSpec& spec, const TraceOptions& options = {});

struct RuntimeRow {
  std::string preset;
  double t_unoptimized = 0.0;
  double t_optimized = 0.0;
  double s_star = 0.0;
  double initial_f = 0.0;
  double initial_g = 0.0;
  double max_entropy = 0.0;
};

struct RuntimeTable {
  Algorithm algorithm = Algorithm::Search;
  int n_qubits = 2;
  int alpha = 0;
  double epsilon = 0.01;
  std::vector<RuntimeRow> rows;  // sorted descending by t_unoptimized
};

struct TableRequest {
  Algorithm algorithm = Algorithm::Search;
  int n_qubits = 2;
  int alpha = 0;
  std::vector<std::string> presets;
  double epsilon = 0.01;
  int grid_points = 20001;
};

struct TableBundle {
  RuntimeTable table;
  std::vector<std::vector<TraceRow>> traces;  // aligned with table.rows
};

TableBundle runtime_table_bundle(const TableRequest& request);
RuntimeTable runtime_table(const TableRequest& request);

std::vector<std::string> default_presets(Algorithm algorithm);
int default_alpha(Algorithm algorithm);

// Spearman rank correlation with average ranks on ties; empty when either
// input has fewer than two entries or no variance.
std::optional<double> spearman(const std::vector<double>& a, const std::vector<double>& b);

struct PresetDiagnostics {
  std::string preset;
  double entropy_argmax_s = 0.0;
  double df_ds_argmax_s = 0.0;
  double entropy_half_max_t = 0.0;  // optimized time of the first half-max crossing
};

struct CorrelationReport {
  std::optional<double> f_vs_unoptimized;
  std::optional<double> f_vs_optimized;
  std::optional<double> g_vs_unoptimized;
  std::optional<double> g_vs_optimized;
  std::vector<PresetDiagnostics> presets;
};

CorrelationReport correlation_report(const RuntimeTable& table,
                                     const std::vector<std::vector<TraceRow>>& traces);

}  // namespace aqc
