#include "aqc/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace aqc {

std::string format_g17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::vector<std::string> trace_column_names(int n_qubits) {
  std::vector<std::string> names{"s", "t_opt", "e_minus", "e_plus", "gap", "m_abs"};
  for (int q = 0; q < n_qubits; ++q) names.push_back("entropy_q" + std::to_string(q));
  names.insert(names.end(), {"entropy_max", "d_norm", "d_unnorm", "d_hs", "F", "G", "dF_ds"});
  return names;
}

double trace_column_value(const TraceRow& row, int n_qubits, std::size_t column) {
  switch (column) {
    case 0: return row.s;
    case 1: return row.t_optimized;
    case 2: return row.e_minus;
    case 3: return row.e_plus;
    case 4: return row.gap;
    case 5: return row.m_abs;
    default: break;
  }
  const std::size_t q = column - 6;
  if (q < static_cast<std::size_t>(n_qubits)) return row.entropy[q];
  switch (column - 6 - static_cast<std::size_t>(n_qubits)) {
    case 0: return row.entropy_max;
    case 1: return row.d_normalized;
    case 2: return row.d_unnormalized;
    case 3: return row.d_hilbert_schmidt;
    case 4: return row.f_value;
    case 5: return row.g_value;
    case 6: return row.df_ds;
    default: throw std::invalid_argument("trace column index out of range");
  }
}

namespace {

void assign_trace_column(TraceRow& row, int n_qubits, std::size_t column, double value) {
  switch (column) {
    case 0: row.s = value; return;
    case 1: row.t_optimized = value; return;
    case 2: row.e_minus = value; return;
    case 3: row.e_plus = value; return;
    case 4: row.gap = value; return;
    case 5: row.m_abs = value; return;
    default: break;
  }
  const std::size_t q = column - 6;
  if (q < static_cast<std::size_t>(n_qubits)) {
    row.entropy[q] = value;
    return;
  }
  switch (column - 6 - static_cast<std::size_t>(n_qubits)) {
    case 0: row.entropy_max = value; return;
    case 1: row.d_normalized = value; return;
    case 2: row.d_unnormalized = value; return;
    case 3: row.d_hilbert_schmidt = value; return;
    case 4: row.f_value = value; return;
    case 5: row.g_value = value; return;
    case 6: row.df_ds = value; return;
    default: throw std::invalid_argument("trace column index out of range");
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

void write_trace_csv(std::ostream& out, int n_qubits, const std::vector<TraceRow>& rows) {
  const std::vector<std::string> names = trace_column_names(n_qubits);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out << ',';
    out << names[i];
  }
  out << '\n';
  for (const TraceRow& row : rows) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i > 0) out << ',';
      out << format_g17(trace_column_value(row, n_qubits, i));
    }
    out << '\n';
  }
}

std::string trace_csv_string(int n_qubits, const std::vector<TraceRow>& rows) {
  std::ostringstream out;
  write_trace_csv(out, n_qubits, rows);
  return out.str();
}

ParsedTrace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("trace CSV: missing header");
  const std::vector<std::string> header = split_csv_line(line);

  int n_qubits = 0;
  for (const std::string& name : header)
    if (name.rfind("entropy_q", 0) == 0) ++n_qubits;
  if (n_qubits < 1 || header != trace_column_names(n_qubits))
    throw std::invalid_argument("trace CSV: unrecognized header layout");

  ParsedTrace parsed;
  parsed.n_qubits = n_qubits;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw std::invalid_argument("trace CSV: row width does not match header");
    TraceRow row;
    row.entropy.resize(static_cast<std::size_t>(n_qubits));
    for (std::size_t i = 0; i < fields.size(); ++i) {
      char* end = nullptr;
      const double value = std::strtod(fields[i].c_str(), &end);
      if (end == fields[i].c_str())
        throw std::invalid_argument("trace CSV: unparsable number '" + fields[i] + "'");
      assign_trace_column(row, n_qubits, i, value);
    }
    parsed.rows.push_back(std::move(row));
  }
  return parsed;
}

}  // namespace aqc
