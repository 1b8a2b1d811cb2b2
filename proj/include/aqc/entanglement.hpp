#pragma once

// Von Neumann entropy over single-qubit bipartitions and geometric
// entanglement via closest-product-state optimization, with the polynomial
// consistency conditions as convergence certificates.

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "aqc/algorithms.hpp"
#include "aqc/numerics.hpp"

namespace aqc {

// Eigenvalue pair of a single-qubit reduced density matrix.
struct SchmidtPair {
  double mu_plus = 1.0;
  double mu_minus = 0.0;
};

// 2x2 reduced density matrix of the kept qubit.
Eigen::Matrix2d reduced_density(const StateVector& state, int kept_qubit);

// mu_+- = (1 +- sqrt(1 - 4 XX)) / 2 with XX the Gram determinant of the
// index split for the kept qubit.
SchmidtPair schmidt_mus(const StateVector& state, int kept_qubit);

// -sum mu log2 mu with 0 log 0 := 0; ranges over [0, 1].
double vn_entropy(const SchmidtPair& mus);

// Per-qubit two-component factors of a (possibly unnormalized) product
// state. Solvers return factors scaled so the product of the squared norms
// equals overlap^2 (the length of the closest unnormalized product state).
struct ProductFactors {
  int n_qubits = 0;
  std::vector<Eigen::Vector2d> factors;

  std::vector<double> norms() const;  // squared norms N_a, N_b, ...
  double norm_product() const;
  Eigen::VectorXd expand() const;  // the 2^n product vector
};

struct GeometricResult {
  double overlap = 0.0;  // max product overlap Lambda in [0, 1]
  double d_normalized = 0.0;       // 2 - 2 Lambda
  double d_unnormalized = 0.0;     // 1 - Lambda^2
  double d_hilbert_schmidt = 0.0;  // sqrt(2 - 2 Lambda^2)
  ProductFactors factors;
  std::vector<double> residuals;  // stationarity residuals, one per qubit
};

// Closed-form closest product state for two qubits via the tangent
// stationarity equations; degenerate denominators fall back to the axis
// candidate set.
GeometricResult closest_product_2q_analytic(const StateVector& state);

struct AlternatingOptions {
  int restarts = 32;
  double tol = 1e-12;  // on the overlap change per sweep
  int max_iters = 500;
  std::uint64_t seed = 0x5EED;
};

class product_search_error : public numerical_error {
 public:
  product_search_error(const std::string& what, GeometricResult best)
      : numerical_error(what), best_(std::move(best)) {}
  const GeometricResult& best() const { return best_; }

 private:
  GeometricResult best_;
};

// Alternating closest-product solver for any n >= 2: each qubit's optimal
// factor given the others is the normalized contraction. Multistart with a
// fixed seed; the first start uses the dominant marginal directions, and an
// optional warm start is tried before everything else. Throws
// product_search_error (carrying the best partial result) if no start
// converges.
GeometricResult closest_product_alternating(const StateVector& state,
                                            const AlternatingOptions& options = {},
                                            const ProductFactors* warm_start = nullptr);

// Polynomial certificates that vanish at a true unnormalized minimizer:
// one residual for n=2, three for n=3.
std::vector<double> consistency_residuals(const StateVector& state,
                                          const ProductFactors& factors);

// Brute-force reference for the maximal product overlap: exhaustive scan of
// the n factor angles over [0, pi) at the given resolution, optionally
// followed by coordinate-wise golden-section refinement around the best grid
// point. Independent of the tangent-equation solvers; used by selftest and
// the verification suites.
double grid_overlap_oracle(const StateVector& state, double resolution, bool refine = true);

}  // namespace aqc
