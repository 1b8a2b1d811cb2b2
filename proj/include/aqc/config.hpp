#pragma once

// Run configuration shared by the CLI commands, plus the amplitude-list
// parser ("1,3/2,1,3/2" style: integers, decimals, simple fractions).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aqc/algorithms.hpp"

namespace aqc {

struct RunConfig {
  Algorithm algorithm = Algorithm::Search;
  int n_qubits = 2;
  std::string initial = "green";  // preset color, "uniform", or amplitude list
  std::optional<int> alpha;
  int marked_index = 0;
  double epsilon = 0.01;
  int grid_points = 20001;
  std::string output;  // empty writes to stdout
  std::string format = "csv";
};

double parse_rational(const std::string& token);
std::vector<double> parse_amplitude_list(const std::string& text);

// Resolves the initial-state field (presets, "uniform", or an explicit
// list). Explicit lists are normalized on ingest; a deviation beyond 1e-6
// prints a warning to `warnings` when given.
StateVector resolve_initial_state(const std::string& initial, int n_qubits,
                                  std::ostream* warnings);

ProblemSpec problem_from_config(const RunConfig& config, std::ostream* warnings);

}  // namespace aqc
