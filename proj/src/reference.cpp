#include "aqc/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace aqc {

namespace {

const char* kReferenceJson = R"json({
  "schema_version": "1",
  "epsilon": 0.01,
  "tolerance": {"relative": 0.02, "absolute": 2.0},
  "tables": [
    {
      "algorithm": "search", "n_qubits": 2, "alpha": 0,
      "unoptimized": {"red": 598, "yellow": 503, "green": 346, "blue": 234, "cyan": 194, "magenta": 165},
      "optimized": {"red": 234, "yellow": 213, "green": 173, "blue": 137, "cyan": 122, "magenta": 110}
    },
    {
      "algorithm": "search", "n_qubits": 3, "alpha": 0,
      "unoptimized": {"red": 3950, "blue": 1949, "cyan": 1249, "green": 748, "yellow": 391, "magenta": 348},
      "optimized": {"red": 624, "blue": 436, "cyan": 346, "green": 264, "yellow": 185, "magenta": 173}
    },
    {
      "algorithm": "dj", "n_qubits": 2, "alpha": 0,
      "unoptimized": {"magenta": 183, "cyan": 128, "blue": 97, "green": 67, "yellow": 55, "red": 52},
      "optimized": {"magenta": 118, "cyan": 93, "blue": 76, "green": 57, "yellow": 49, "red": 46}
    },
    {
      "algorithm": "dj", "n_qubits": 3, "alpha": 0,
      "unoptimized": {"magenta": 217, "yellow": 104, "red": 55, "blue": 43, "green": 40, "cyan": 37},
      "optimized": {"magenta": 131, "yellow": 81, "red": 49, "blue": 39, "green": 37, "cyan": 35}
    },
    {
      "algorithm": "ctdj", "n_qubits": 2, "alpha": 1,
      "unoptimized": {"cyan": 165, "blue": 150, "yellow": 146},
      "optimized": {"cyan": 110, "blue": 103, "yellow": 102}
    }
  ]
})json";

std::vector<ReferenceTable> parse_reference_tables() {
  const nlohmann::json doc = nlohmann::json::parse(kReferenceJson);
  std::vector<ReferenceTable> tables;
  for (const auto& entry : doc.at("tables")) {
    ReferenceTable table;
    table.algorithm = parse_algorithm(entry.at("algorithm").get<std::string>());
    table.n_qubits = entry.at("n_qubits").get<int>();
    table.alpha = entry.at("alpha").get<int>();
    for (const auto& [preset, value] : entry.at("unoptimized").items())
      table.unoptimized[preset] = value.get<double>();
    for (const auto& [preset, value] : entry.at("optimized").items())
      table.optimized[preset] = value.get<double>();
    tables.push_back(std::move(table));
  }
  return tables;
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = parse_reference_tables();
  return tables;
}

const ReferenceTable* find_reference_table(Algorithm algorithm, int n_qubits, int alpha) {
  for (const ReferenceTable& table : reference_tables())
    if (table.algorithm == algorithm && table.n_qubits == n_qubits && table.alpha == alpha)
      return &table;
  return nullptr;
}

const std::string& reference_tables_json() {
  static const std::string json = kReferenceJson;
  return json;
}

double reference_epsilon() { return 0.01; }

bool within_reference_tolerance(double value, double reference) {
  const double band = std::max(0.02 * std::abs(reference), 2.0);
  return std::abs(value - reference) <= band;
}

}  // namespace aqc
