#pragma once

// Published reference running times the tables are checked against, embedded
// as a JSON resource.

#include <map>
#include <string>
#include <vector>

#include "aqc/algorithms.hpp"

namespace aqc {

struct ReferenceTable {
  Algorithm algorithm = Algorithm::Search;
  int n_qubits = 2;
  int alpha = 0;
  std::map<std::string, double> unoptimized;
  std::map<std::string, double> optimized;
};

const std::vector<ReferenceTable>& reference_tables();
const ReferenceTable* find_reference_table(Algorithm algorithm, int n_qubits, int alpha);
const std::string& reference_tables_json();

double reference_epsilon();  // the accuracy the reference values assume

// Tolerance band for a reference comparison: +-2% or +-2 absolute, whichever
// is larger.
bool within_reference_tolerance(double value, double reference);

}  // namespace aqc
