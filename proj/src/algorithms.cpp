#include "aqc/algorithms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace aqc {

namespace {

constexpr double kNormTolerance = 1e-9;

struct PresetEntry {
  const char* color;
  std::array<std::pair<int, int>, 4> two;    // numerator/denominator pairs
  std::array<int, 8> three;
};

// Component lists before normalization; the n=2 families carry simple
// fractions, the n=3 families are integral.
constexpr std::array<PresetEntry, 6> kPresets{{
    {"red", {{{1, 1}, {3, 2}, {1, 1}, {3, 2}}}, {1, 1, 3, 3, 1, 1, 3, 3}},
    {"yellow", {{{1, 1}, {1, 1}, {4, 3}, {4, 3}}}, {3, 3, 3, 3, 1, 1, 1, 1}},
    {"green", {{{1, 1}, {1, 1}, {1, 1}, {1, 1}}}, {1, 1, 1, 1, 1, 1, 1, 1}},
    {"blue", {{{1, 1}, {1, 1}, {2, 3}, {2, 3}}}, {1, 1, 2, 2, 1, 1, 2, 2}},
    {"cyan", {{{2, 1}, {2, 1}, {1, 1}, {1, 1}}}, {2, 2, 2, 2, 3, 3, 3, 3}},
    {"magenta", {{{3, 1}, {1, 1}, {3, 1}, {1, 1}}}, {19, 19, 1, 1, 19, 19, 1, 1}},
}};

Eigen::Index dimension_of(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30)
    throw std::invalid_argument("qubit count must be between 1 and 30");
  return Eigen::Index(1) << n_qubits;
}

void require_normalized(const StateVector& state, const char* who) {
  if (std::abs(state.amps.norm() - 1.0) > kNormTolerance)
    throw std::invalid_argument(std::string(who) + ": state is not normalized");
}

bool is_uniform(const StateVector& state) {
  const double expected = 1.0 / std::sqrt(double(state.dim()));
  return (state.amps.array() - expected).abs().maxCoeff() <= 1e-12;
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Search:
      return "search";
    case Algorithm::DeutschJozsa:
      return "dj";
    case Algorithm::ConstantTimeDJ:
      return "ctdj";
  }
  throw std::invalid_argument("unknown algorithm enumerator");
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "search") return Algorithm::Search;
  if (name == "dj" || name == "deutsch-jozsa") return Algorithm::DeutschJozsa;
  if (name == "ctdj" || name == "constant-time-dj") return Algorithm::ConstantTimeDJ;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected search, dj, or ctdj)");
}

void validate(const ProblemSpec& spec) {
  const Eigen::Index dim = dimension_of(spec.n_qubits);
  if (spec.initial.n_qubits != spec.n_qubits || spec.initial.dim() != dim)
    throw std::invalid_argument("problem spec: initial state size does not match qubit count");
  require_normalized(spec.initial, "problem spec");
  if (spec.alpha != 0 && spec.alpha != 1)
    throw std::invalid_argument("problem spec: alpha must be 0 or 1");
  if (spec.marked_index < 0 || spec.marked_index >= dim)
    throw std::invalid_argument("problem spec: marked index out of range");
}

SchedulePoint schedule_point(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::invalid_argument("schedule time s must lie in [0, 1]");
  return {s, 1.0 - s, s};
}

StateVector make_state(int n_qubits, Eigen::VectorXd amps) {
  if (amps.size() != dimension_of(n_qubits))
    throw std::invalid_argument("state vector length must be 2^n_qubits");
  return {n_qubits, std::move(amps)};
}

StateVector normalized_state(int n_qubits, Eigen::VectorXd amps) {
  StateVector state = make_state(n_qubits, std::move(amps));
  const double norm = state.amps.norm();
  if (norm <= 0.0) throw std::invalid_argument("cannot normalize a zero state vector");
  state.amps /= norm;
  return state;
}

StateVector uniform_state(int n_qubits) {
  const Eigen::Index dim = dimension_of(n_qubits);
  return {n_qubits, Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(double(dim)))};
}

StateVector preset_state(std::string_view color, int n_qubits) {
  if (n_qubits != 2 && n_qubits != 3)
    throw std::invalid_argument("preset states are defined for 2 or 3 qubits");
  for (const auto& entry : kPresets) {
    if (color != entry.color) continue;
    Eigen::VectorXd amps(n_qubits == 2 ? 4 : 8);
    if (n_qubits == 2) {
      for (int i = 0; i < 4; ++i)
        amps(i) = double(entry.two[i].first) / double(entry.two[i].second);
    } else {
      for (int i = 0; i < 8; ++i) amps(i) = double(entry.three[i]);
    }
    return normalized_state(n_qubits, std::move(amps));
  }
  throw std::invalid_argument("unknown preset color '" + std::string(color) + "'");
}

const std::vector<std::string>& preset_colors() {
  static const std::vector<std::string> colors = [] {
    std::vector<std::string> out;
    for (const auto& entry : kPresets) out.emplace_back(entry.color);
    return out;
  }();
  return colors;
}

StateVector final_state(const ProblemSpec& spec) {
  validate(spec);
  const Eigen::Index dim = dimension_of(spec.n_qubits);
  Eigen::VectorXd amps = Eigen::VectorXd::Zero(dim);
  switch (spec.algorithm) {
    case Algorithm::Search:
      amps(spec.marked_index) = 1.0;
      break;
    case Algorithm::DeutschJozsa: {
      const double alpha = double(spec.alpha);
      const double beta = 1.0 - alpha;
      amps(0) = alpha;
      for (Eigen::Index k = 1; k < dim; ++k) amps(k) = beta / std::sqrt(double(dim - 1));
      break;
    }
    case Algorithm::ConstantTimeDJ: {
      const double alpha = double(spec.alpha);
      const double beta = 1.0 - alpha;
      const double half = std::sqrt(double(dim) / 2.0);
      for (Eigen::Index k = 0; k < dim; k += 2) amps(k) = alpha / half;
      for (Eigen::Index k = 1; k < dim; k += 2) amps(k) = beta / half;
      break;
    }
  }
  return {spec.n_qubits, std::move(amps)};
}

Eigen::MatrixXd projector_hamiltonian(const StateVector& psi) {
  require_normalized(psi, "projector_hamiltonian");
  const Eigen::Index dim = psi.dim();
  return Eigen::MatrixXd::Identity(dim, dim) - psi.amps * psi.amps.transpose();
}

Eigen::MatrixXd hamiltonian_at(const ProblemSpec& spec, double s) {
  const SchedulePoint point = schedule_point(s);
  return point.f * projector_hamiltonian(spec.initial) +
         point.g * projector_hamiltonian(final_state(spec));
}

Eigen::MatrixXd dh_ds(const ProblemSpec& spec) {
  return projector_hamiltonian(final_state(spec)) - projector_hamiltonian(spec.initial);
}

LowSpectrum analytic_low_spectrum(const ProblemSpec& spec, double s) {
  validate(spec);
  if (!is_uniform(spec.initial))
    throw unsupported_analytic_form(
        "analytic_low_spectrum: closed forms assume the uniform initial state");
  const SchedulePoint pt = schedule_point(s);
  const double f = pt.f, g = pt.g;
  const double dim = double(spec.initial.dim());
  double root = 0.0;
  switch (spec.algorithm) {
    case Algorithm::Search:
      root = std::sqrt((f - g) * (f - g) + 4.0 / dim * f * g);
      break;
    case Algorithm::DeutschJozsa: {
      const double d = double(spec.alpha) - (1.0 - double(spec.alpha));
      root = std::sqrt((f - d * g) * (f - d * g) + 4.0 / dim * d * f * g);
      break;
    }
    case Algorithm::ConstantTimeDJ:
      root = std::sqrt(1.0 - 2.0 * s * (1.0 - s));
      break;
  }
  return {0.5 * ((f + g) - root), 0.5 * ((f + g) + root)};
}

}  // namespace aqc
