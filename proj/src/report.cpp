#include "aqc/report.hpp"

#include <cstdio>
#include <ostream>

namespace aqc {

namespace {

std::string fixed(double value, int digits) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

ordered_json optional_to_json(const std::optional<double>& value) {
  if (!value.has_value()) return nullptr;
  return *value;
}

std::string optional_text(const std::optional<double>& value) {
  return value.has_value() ? fixed(*value, 4) : std::string("n/a");
}

}  // namespace

ordered_json table_to_json(const RuntimeTable& table) {
  ordered_json doc;
  doc["schema_version"] = "1";
  doc["algorithm"] = std::string(algorithm_name(table.algorithm));
  doc["n_qubits"] = table.n_qubits;
  doc["alpha"] = table.alpha;
  doc["epsilon"] = table.epsilon;
  doc["rows"] = ordered_json::array();
  for (const RuntimeRow& row : table.rows) {
    ordered_json entry;
    entry["preset"] = row.preset;
    entry["t_unoptimized"] = row.t_unoptimized;
    entry["t_optimized"] = row.t_optimized;
    entry["s_star"] = row.s_star;
    entry["initial_f"] = row.initial_f;
    entry["initial_g"] = row.initial_g;
    entry["max_entropy"] = row.max_entropy;
    doc["rows"].push_back(std::move(entry));
  }
  return doc;
}

ordered_json correlation_to_json(const CorrelationReport& report) {
  ordered_json doc;
  doc["schema_version"] = "1";
  doc["spearman"] = {
      {"initial_f_vs_t_unoptimized", optional_to_json(report.f_vs_unoptimized)},
      {"initial_f_vs_t_optimized", optional_to_json(report.f_vs_optimized)},
      {"initial_g_vs_t_unoptimized", optional_to_json(report.g_vs_unoptimized)},
      {"initial_g_vs_t_optimized", optional_to_json(report.g_vs_optimized)},
  };
  doc["presets"] = ordered_json::array();
  for (const PresetDiagnostics& diag : report.presets) {
    ordered_json entry;
    entry["preset"] = diag.preset;
    entry["entropy_argmax_s"] = diag.entropy_argmax_s;
    entry["df_ds_argmax_s"] = diag.df_ds_argmax_s;
    entry["entropy_half_max_t_opt"] = diag.entropy_half_max_t;
    doc["presets"].push_back(std::move(entry));
  }
  return doc;
}

ordered_json geometric_to_json(const StateVector& state, const GeometricResult& result) {
  ordered_json doc;
  doc["schema_version"] = "1";
  doc["n_qubits"] = state.n_qubits;
  doc["overlap"] = result.overlap;
  doc["d_normalized"] = result.d_normalized;
  doc["d_unnormalized"] = result.d_unnormalized;
  doc["d_hilbert_schmidt"] = result.d_hilbert_schmidt;
  doc["factors"] = ordered_json::array();
  for (const auto& factor : result.factors.factors)
    doc["factors"].push_back({factor(0), factor(1)});
  doc["factor_norms"] = result.factors.norms();
  doc["stationarity_residuals"] = result.residuals;
  if (state.n_qubits == 2 || state.n_qubits == 3)
    doc["consistency_residuals"] = consistency_residuals(state, result.factors);
  return doc;
}

void print_table_text(std::ostream& out, const RuntimeTable& table) {
  out << "algorithm " << algorithm_name(table.algorithm) << ", n=" << table.n_qubits;
  if (table.algorithm != Algorithm::Search) out << ", alpha=" << table.alpha;
  out << ", eps=" << fixed(table.epsilon, 4) << "\n";
  out << "  preset      T_unopt      T_opt   s*       F(0)      G(0)   max entropy\n";
  for (const RuntimeRow& row : table.rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-8s %10.2f %10.2f  %5.3f  %8.5f  %8.5f  %10.5f\n",
                  row.preset.c_str(), row.t_unoptimized, row.t_optimized, row.s_star,
                  row.initial_f, row.initial_g, row.max_entropy);
    out << line;
  }
}

void print_correlation_text(std::ostream& out, const CorrelationReport& report) {
  out << "spearman rank correlations\n"
      << "  initial F vs T_unopt: " << optional_text(report.f_vs_unoptimized) << "\n"
      << "  initial F vs T_opt:   " << optional_text(report.f_vs_optimized) << "\n"
      << "  initial G vs T_unopt: " << optional_text(report.g_vs_unoptimized) << "\n"
      << "  initial G vs T_opt:   " << optional_text(report.g_vs_optimized) << "\n";
  if (report.presets.empty()) return;
  out << "per-preset diagnostics\n"
      << "  preset    argmax_s entropy   argmax_s |dF/ds|   half-max entropy t_opt\n";
  for (const PresetDiagnostics& diag : report.presets) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-8s %16.4f %18.4f %24.3f\n", diag.preset.c_str(),
                  diag.entropy_argmax_s, diag.df_ds_argmax_s, diag.entropy_half_max_t);
    out << line;
  }
}

}  // namespace aqc
