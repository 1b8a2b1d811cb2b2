#include "aqc/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace aqc {

namespace {

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

double parse_number(const std::string& token) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || token.empty())
    throw std::invalid_argument("cannot parse amplitude '" + token + "'");
  return value;
}

}  // namespace

double parse_rational(const std::string& token) {
  const std::string text = trimmed(token);
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_number(text);
  const double numerator = parse_number(text.substr(0, slash));
  const double denominator = parse_number(text.substr(slash + 1));
  if (denominator == 0.0) throw std::invalid_argument("zero denominator in '" + token + "'");
  return numerator / denominator;
}

std::vector<double> parse_amplitude_list(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) values.push_back(parse_rational(token));
  if (values.empty()) throw std::invalid_argument("empty amplitude list");
  return values;
}

StateVector resolve_initial_state(const std::string& initial, int n_qubits,
                                  std::ostream* warnings) {
  const std::string text = trimmed(initial);
  if (text == "uniform") return uniform_state(n_qubits);
  const auto& colors = preset_colors();
  if (std::find(colors.begin(), colors.end(), text) != colors.end())
    return preset_state(text, n_qubits);
  if (text.find_first_of("0123456789.") == std::string::npos)
    throw std::invalid_argument("unknown initial state '" + initial +
                                "' (preset color, 'uniform', or amplitude list)");

  const std::vector<double> values = parse_amplitude_list(text);
  Eigen::VectorXd amps(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) amps(static_cast<Eigen::Index>(i)) = values[i];
  if (amps.size() != (Eigen::Index(1) << n_qubits))
    throw std::invalid_argument("amplitude list length must be 2^n_qubits");
  const double norm = amps.norm();
  if (warnings != nullptr && std::abs(norm - 1.0) > 1e-6)
    *warnings << "note: input amplitudes had norm " << norm << "; normalized on ingest\n";
  return normalized_state(n_qubits, std::move(amps));
}

ProblemSpec problem_from_config(const RunConfig& config, std::ostream* warnings) {
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (config.grid_points < 1001) throw std::invalid_argument("grid points must be >= 1001");

  ProblemSpec spec;
  spec.algorithm = config.algorithm;
  spec.n_qubits = config.n_qubits;
  spec.initial = resolve_initial_state(config.initial, config.n_qubits, warnings);
  spec.marked_index = config.marked_index;
  if (config.alpha.has_value()) {
    if (config.algorithm == Algorithm::Search)
      throw std::invalid_argument("--alpha applies only to the dj and ctdj algorithms");
    spec.alpha = *config.alpha;
  } else {
    spec.alpha = config.algorithm == Algorithm::ConstantTimeDJ ? 1 : 0;
  }
  validate(spec);
  return spec;
}

}  // namespace aqc
