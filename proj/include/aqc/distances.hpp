#pragma once

// State-to-state distance diagnostics: the overlap-based fidelity distance F
// and the componentwise magnitude separation G. Both are invariant under a
// global sign flip of either argument.

#include "aqc/algorithms.hpp"

namespace aqc {

// F = 1 - |<a|b>|; zero iff the states coincide up to global sign.
double fidelity_distance(const StateVector& a, const StateVector& b);

// G = sum_i | |a_i| - |b_i| |; the 1-norm of the magnitude difference.
double geometric_separation(const StateVector& a, const StateVector& b);

}  // namespace aqc
