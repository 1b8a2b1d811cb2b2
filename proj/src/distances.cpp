#include "aqc/distances.hpp"

#include <cmath>
#include <stdexcept>

namespace aqc {

namespace {

void check_dimensions(const StateVector& a, const StateVector& b, const char* who) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(who) + ": state dimensions differ");
}

}  // namespace

double fidelity_distance(const StateVector& a, const StateVector& b) {
  check_dimensions(a, b, "fidelity_distance");
  if (std::abs(a.amps.norm() - 1.0) > 1e-6 || std::abs(b.amps.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("fidelity_distance: states must be normalized");
  return std::max(0.0, 1.0 - std::abs(a.amps.dot(b.amps)));
}

double geometric_separation(const StateVector& a, const StateVector& b) {
  check_dimensions(a, b, "geometric_separation");
  return (a.amps.cwiseAbs() - b.amps.cwiseAbs()).cwiseAbs().sum();
}

}  // namespace aqc
