#pragma once

// Trace serialization. Floats are written with 17 significant digits so that
// parse + re-emit is byte identical.

#include <iosfwd>
#include <string>
#include <vector>

#include "aqc/trace.hpp"

namespace aqc {

std::string format_g17(double value);

// Column names in file order for an n-qubit trace:
// s,t_opt,e_minus,e_plus,gap,m_abs,entropy_q0,...,entropy_max,d_norm,
// d_unnorm,d_hs,F,G,dF_ds
std::vector<std::string> trace_column_names(int n_qubits);
double trace_column_value(const TraceRow& row, int n_qubits, std::size_t column);

void write_trace_csv(std::ostream& out, int n_qubits, const std::vector<TraceRow>& rows);
std::string trace_csv_string(int n_qubits, const std::vector<TraceRow>& rows);

struct ParsedTrace {
  int n_qubits = 0;
  std::vector<TraceRow> rows;
};

ParsedTrace read_trace_csv(std::istream& in);

}  // namespace aqc
