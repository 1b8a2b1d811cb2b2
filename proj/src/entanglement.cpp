#include "aqc/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace aqc {

namespace {

constexpr double kPi = 3.14159265358979323846;

int bit_of(Eigen::Index index, int n_qubits, int qubit) {
  return int((index >> (n_qubits - 1 - qubit)) & 1);
}

void check_qubit_index(const StateVector& state, int kept_qubit) {
  if (kept_qubit < 0 || kept_qubit >= state.n_qubits)
    throw std::invalid_argument("kept qubit index out of range");
}

// Amplitudes split by the kept qubit's bit value, order preserved.
void split_state(const StateVector& state, int kept_qubit, Eigen::VectorXd& v1,
                 Eigen::VectorXd& v2) {
  check_qubit_index(state, kept_qubit);
  const Eigen::Index half = state.dim() / 2;
  v1.resize(half);
  v2.resize(half);
  Eigen::Index i1 = 0, i2 = 0;
  for (Eigen::Index idx = 0; idx < state.dim(); ++idx) {
    if (bit_of(idx, state.n_qubits, kept_qubit))
      v2(i2++) = state.amps(idx);
    else
      v1(i1++) = state.amps(idx);
  }
}

// Contraction of the state against every unit factor except qubit q; the
// optimal factor for q is this vector normalized, and its length is the
// overlap after the update.
Eigen::Vector2d contract_except(const StateVector& state,
                                const std::vector<Eigen::Vector2d>& factors, int q) {
  const int n = state.n_qubits;
  Eigen::Vector2d t = Eigen::Vector2d::Zero();
  for (Eigen::Index idx = 0; idx < state.dim(); ++idx) {
    double w = state.amps(idx);
    for (int r = 0; r < n; ++r) {
      if (r == q) continue;
      w *= factors[static_cast<std::size_t>(r)](bit_of(idx, n, r));
    }
    t(bit_of(idx, n, q)) += w;
  }
  return t;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

GeometricResult finish_result(const StateVector& state, std::vector<Eigen::Vector2d> unit_factors,
                              double overlap) {
  const int n = state.n_qubits;
  GeometricResult out;
  out.overlap = clamp01(overlap);
  out.d_normalized = std::max(0.0, 2.0 - 2.0 * out.overlap);
  out.d_unnormalized = std::max(0.0, 1.0 - out.overlap * out.overlap);
  out.d_hilbert_schmidt = std::sqrt(std::max(0.0, 2.0 - 2.0 * out.overlap * out.overlap));

  out.residuals.resize(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    const Eigen::Vector2d t = contract_except(state, unit_factors, q);
    out.residuals[static_cast<std::size_t>(q)] =
        (t - out.overlap * unit_factors[static_cast<std::size_t>(q)]).norm();
  }

  // Scale the unit factors so the product state carries the minimizing
  // length: norm product = overlap^2, split evenly across qubits.
  const double scale = std::pow(out.overlap, 1.0 / double(n));
  for (auto& f : unit_factors) f *= scale;
  out.factors = ProductFactors{n, std::move(unit_factors)};
  return out;
}

// Dominant eigenvector of the qubit's 2x2 reduced density matrix.
Eigen::Vector2d dominant_marginal(const StateVector& state, int q) {
  const Eigen::Matrix2d rho = reduced_density(state, q);
  const double x = rho(0, 0), y = rho(1, 1), z = rho(0, 1);
  const double mean = 0.5 * (x + y);
  const double radius = std::sqrt(0.25 * (x - y) * (x - y) + z * z);
  const double lambda = mean + radius;
  Eigen::Vector2d v;
  if (std::abs(lambda - x) >= std::abs(lambda - y))
    v = Eigen::Vector2d(z, lambda - x);
  else
    v = Eigen::Vector2d(lambda - y, z);
  const double len = v.norm();
  if (len < 1e-14) return x >= y ? Eigen::Vector2d(1, 0) : Eigen::Vector2d(0, 1);
  return v / len;
}

}  // namespace

Eigen::Matrix2d reduced_density(const StateVector& state, int kept_qubit) {
  Eigen::VectorXd v1, v2;
  split_state(state, kept_qubit, v1, v2);
  Eigen::Matrix2d rho;
  rho(0, 0) = v1.squaredNorm();
  rho(1, 1) = v2.squaredNorm();
  rho(0, 1) = rho(1, 0) = v1.dot(v2);
  return rho;
}

SchmidtPair schmidt_mus(const StateVector& state, int kept_qubit) {
  Eigen::VectorXd v1, v2;
  split_state(state, kept_qubit, v1, v2);
  double xx = v1.squaredNorm() * v2.squaredNorm() - std::pow(v1.dot(v2), 2);
  if (xx < 0.0) {
    if (xx < -1e-12)
      throw numerical_error("schmidt_mus: reduced density is indefinite beyond tolerance");
    xx = 0.0;
  }
  const double disc = 1.0 - 4.0 * xx;
  if (disc < -1e-12)
    throw numerical_error("schmidt_mus: eigenvalue discriminant negative beyond tolerance");
  const double mu_plus = std::min(1.0, 0.5 * (1.0 + std::sqrt(std::max(disc, 0.0))));
  return {mu_plus, 1.0 - mu_plus};
}

double vn_entropy(const SchmidtPair& mus) {
  auto term = [](double mu) { return mu > 0.0 ? -mu * std::log2(mu) : 0.0; };
  return term(mus.mu_plus) + term(mus.mu_minus);
}

std::vector<double> ProductFactors::norms() const {
  std::vector<double> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.squaredNorm());
  return out;
}

double ProductFactors::norm_product() const {
  double prod = 1.0;
  for (const auto& f : factors) prod *= f.squaredNorm();
  return prod;
}

Eigen::VectorXd ProductFactors::expand() const {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Eigen::VectorXd out(dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    double w = 1.0;
    for (int r = 0; r < n_qubits; ++r) w *= factors[static_cast<std::size_t>(r)](bit_of(idx, n_qubits, r));
    out(idx) = w;
  }
  return out;
}

GeometricResult closest_product_2q_analytic(const StateVector& state) {
  if (state.n_qubits != 2)
    throw std::invalid_argument("closest_product_2q_analytic: need a two-qubit state");
  const double c0 = state.amps(0), c1 = state.amps(1), c2 = state.amps(2), c3 = state.amps(3);

  struct Candidate {
    double theta;
    double phi;
  };
  std::vector<Candidate> candidates;

  auto theta_from_phi = [&](double phi, std::vector<Candidate>& out) {
    const double tp = std::tan(phi);
    const double num = std::isinf(tp) ? c3 : c2 + c3 * tp;
    const double den = std::isinf(tp) ? c1 : c0 + c1 * tp;
    if (std::abs(num) < 1e-14 && std::abs(den) < 1e-14) {
      out.push_back({0.0, phi});
      out.push_back({kPi / 2.0, phi});
    } else {
      out.push_back({std::atan2(num, den), phi});
    }
  };
  auto phi_from_theta = [&](double theta, std::vector<Candidate>& out) {
    const double tt = std::tan(theta);
    const double num = std::isinf(tt) ? c3 : c1 + c3 * tt;
    const double den = std::isinf(tt) ? c2 : c0 + c2 * tt;
    if (std::abs(num) < 1e-14 && std::abs(den) < 1e-14) {
      out.push_back({theta, 0.0});
      out.push_back({theta, kPi / 2.0});
    } else {
      out.push_back({theta, std::atan2(num, den)});
    }
  };

  // Both +- branches of the quadratic for tan(phi); a vanishing leading
  // coefficient degenerates the roots to the axes.
  const double a_phi = c0 * c1 + c2 * c3;
  const double b_phi = c1 * c1 + c3 * c3 - c0 * c0 - c2 * c2;
  if (std::abs(a_phi) > 1e-14) {
    const double root = std::sqrt(b_phi * b_phi + 4.0 * a_phi * a_phi);
    theta_from_phi(std::atan((b_phi + root) / (2.0 * a_phi)), candidates);
    theta_from_phi(std::atan((b_phi - root) / (2.0 * a_phi)), candidates);
  } else {
    theta_from_phi(0.0, candidates);
    theta_from_phi(kPi / 2.0, candidates);
  }

  // Same construction with the roles of theta and phi swapped; covers the
  // symmetric degeneracies.
  const double a_theta = c0 * c2 + c1 * c3;
  const double b_theta = c2 * c2 + c3 * c3 - c0 * c0 - c1 * c1;
  if (std::abs(a_theta) > 1e-14) {
    const double root = std::sqrt(b_theta * b_theta + 4.0 * a_theta * a_theta);
    phi_from_theta(std::atan((b_theta + root) / (2.0 * a_theta)), candidates);
    phi_from_theta(std::atan((b_theta - root) / (2.0 * a_theta)), candidates);
  } else {
    phi_from_theta(0.0, candidates);
    phi_from_theta(kPi / 2.0, candidates);
  }

  auto overlap_at = [&](const Candidate& cand) {
    const double ct = std::cos(cand.theta), st = std::sin(cand.theta);
    const double cp = std::cos(cand.phi), sp = std::sin(cand.phi);
    return c0 * ct * cp + c1 * ct * sp + c2 * st * cp + c3 * st * sp;
  };

  Candidate best = candidates.front();
  double best_overlap = std::abs(overlap_at(best));
  double best_tan = std::abs(std::tan(best.phi));
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double overlap = std::abs(overlap_at(candidates[i]));
    const double tan_mag = std::abs(std::tan(candidates[i].phi));
    // Equal-overlap ties break toward the smaller |tan phi|.
    if (overlap > best_overlap || (overlap == best_overlap && tan_mag < best_tan)) {
      best = candidates[i];
      best_overlap = overlap;
      best_tan = tan_mag;
    }
  }

  std::vector<Eigen::Vector2d> factors{
      Eigen::Vector2d(std::cos(best.theta), std::sin(best.theta)),
      Eigen::Vector2d(std::cos(best.phi), std::sin(best.phi))};
  if (overlap_at(best) < 0.0) factors[0] = -factors[0];
  return finish_result(state, std::move(factors), best_overlap);
}

GeometricResult closest_product_alternating(const StateVector& state,
                                            const AlternatingOptions& options,
                                            const ProductFactors* warm_start) {
  const int n = state.n_qubits;
  if (n < 2) throw std::invalid_argument("closest_product_alternating: need at least 2 qubits");
  if (options.restarts < 1 || options.max_iters < 1 || !(options.tol > 0.0))
    throw std::invalid_argument("closest_product_alternating: invalid options");

  std::vector<std::vector<Eigen::Vector2d>> starts;
  starts.reserve(static_cast<std::size_t>(options.restarts) + 1);
  if (warm_start != nullptr) {
    if (warm_start->n_qubits != n || warm_start->factors.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("closest_product_alternating: warm start shape mismatch");
    std::vector<Eigen::Vector2d> f = warm_start->factors;
    bool usable = true;
    for (auto& factor : f) {
      const double len = factor.norm();
      if (len < 1e-14) {
        usable = false;
        break;
      }
      factor /= len;
    }
    if (usable) starts.push_back(std::move(f));
  }
  {
    std::vector<Eigen::Vector2d> f(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) f[static_cast<std::size_t>(q)] = dominant_marginal(state, q);
    starts.push_back(std::move(f));
  }
  std::mt19937_64 rng(options.seed);
  auto draw_angle = [&rng] { return kPi * double(rng() >> 11) * 0x1p-53; };
  for (int r = 1; r < options.restarts; ++r) {
    std::vector<Eigen::Vector2d> f(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      const double angle = draw_angle();
      f[static_cast<std::size_t>(q)] = Eigen::Vector2d(std::cos(angle), std::sin(angle));
    }
    starts.push_back(std::move(f));
  }

  double best_overlap = -1.0;
  std::vector<Eigen::Vector2d> best_factors;
  bool any_converged = false;
  for (auto& factors : starts) {
    double overlap = 0.0;
    bool converged = false;
    for (int iter = 0; iter < options.max_iters; ++iter) {
      double sweep_overlap = overlap;
      for (int q = 0; q < n; ++q) {
        const Eigen::Vector2d t = contract_except(state, factors, q);
        const double len = t.norm();
        if (len > 0.0) {
          factors[static_cast<std::size_t>(q)] = t / len;
          sweep_overlap = len;
        }
      }
      if (std::abs(sweep_overlap - overlap) < options.tol) {
        overlap = sweep_overlap;
        converged = true;
        break;
      }
      overlap = sweep_overlap;
    }
    any_converged = any_converged || converged;
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best_factors = factors;
    }
  }

  GeometricResult result = finish_result(state, std::move(best_factors), best_overlap);
  if (!any_converged)
    throw product_search_error("closest_product_alternating: no restart converged",
                               std::move(result));
  return result;
}

std::vector<double> consistency_residuals(const StateVector& state,
                                          const ProductFactors& factors) {
  if (state.n_qubits != factors.n_qubits ||
      factors.factors.size() != static_cast<std::size_t>(factors.n_qubits))
    throw std::invalid_argument("consistency_residuals: state/factor shape mismatch");

  if (state.n_qubits == 2) {
    const double det = state.amps(0) * state.amps(3) - state.amps(1) * state.amps(2);
    const double nanb = factors.norm_product();
    return {std::abs(nanb * nanb - nanb + det * det)};
  }
  if (state.n_qubits != 3)
    throw std::invalid_argument("consistency_residuals: defined for 2 or 3 qubits");

  const double c0 = state.amps(0), c1 = state.amps(1), c2 = state.amps(2), c3 = state.amps(3);
  const double c4 = state.amps(4), c5 = state.amps(5), c6 = state.amps(6), c7 = state.amps(7);
  const double a1 = factors.factors[0](0), a2 = factors.factors[0](1);
  const double b1 = factors.factors[1](0), b2 = factors.factors[1](1);
  const double e1 = factors.factors[2](0), e2 = factors.factors[2](1);
  const double na = a1 * a1 + a2 * a2;
  const double nb = b1 * b1 + b2 * b2;
  const double ne = e1 * e1 + e2 * e2;

  // Each condition is det(M M^T - lambda I) = 0 for the 2x2 contraction M
  // over the other two qubits, with lambda the matching product of factor
  // norms: lambda^2 - lambda tr(M M^T) + det(M)^2 = 0.
  const double tr_e = (c0 * c0 + c2 * c2 + c4 * c4 + c6 * c6) * e1 * e1 +
                      2.0 * (c0 * c1 + c2 * c3 + c4 * c5 + c6 * c7) * e1 * e2 +
                      (c1 * c1 + c3 * c3 + c5 * c5 + c7 * c7) * e2 * e2;
  const double det_e = (c2 * c4 - c0 * c6) * e1 * e1 +
                       (c3 * c4 + c2 * c5 - c1 * c6 - c0 * c7) * e1 * e2 +
                       (c3 * c5 - c1 * c7) * e2 * e2;
  const double r1 = ne * ne * ne * ne * na * na * nb * nb - ne * ne * na * nb * tr_e + det_e * det_e;

  const double tr_a = (c0 * c0 + c1 * c1 + c2 * c2 + c3 * c3) * a1 * a1 +
                      2.0 * (c0 * c4 + c1 * c5 + c2 * c6 + c3 * c7) * a1 * a2 +
                      (c4 * c4 + c5 * c5 + c6 * c6 + c7 * c7) * a2 * a2;
  const double det_a = (c0 * c3 - c1 * c2) * a1 * a1 +
                       (c0 * c7 + c3 * c4 - c1 * c6 - c2 * c5) * a1 * a2 +
                       (c4 * c7 - c5 * c6) * a2 * a2;
  const double r2 = na * na * na * na * nb * nb * ne * ne - na * na * nb * ne * tr_a + det_a * det_a;

  const double tr_b = (c0 * c0 + c1 * c1 + c4 * c4 + c5 * c5) * b1 * b1 +
                      2.0 * (c0 * c2 + c1 * c3 + c4 * c6 + c5 * c7) * b1 * b2 +
                      (c2 * c2 + c3 * c3 + c6 * c6 + c7 * c7) * b2 * b2;
  const double det_b = (c0 * c5 - c1 * c4) * b1 * b1 +
                       (c0 * c7 + c2 * c5 - c1 * c6 - c3 * c4) * b1 * b2 +
                       (c2 * c7 - c3 * c6) * b2 * b2;
  const double r3 = nb * nb * nb * nb * na * na * ne * ne - nb * nb * na * ne * tr_b + det_b * det_b;

  return {std::abs(r1), std::abs(r2), std::abs(r3)};
}

namespace {

// Exhaustive scan over the per-qubit factor angles with progressive
// contraction: level l folds qubit l into a preallocated half-size buffer,
// so the innermost loop touches only a couple of doubles.
class OverlapScanner {
 public:
  OverlapScanner(const Eigen::VectorXd& amps, const std::vector<double>& grid)
      : amps_(amps), grid_(grid), levels_(0) {
    Eigen::Index size = amps.size();
    while (size > 1) {
      buffers_.emplace_back(size / 2);
      size /= 2;
      ++levels_;
    }
    cos_.reserve(grid.size());
    sin_.reserve(grid.size());
    for (double angle : grid) {
      cos_.push_back(std::cos(angle));
      sin_.push_back(std::sin(angle));
    }
    current_.assign(static_cast<std::size_t>(levels_), 0.0);
    best_angles_ = current_;
  }

  double run() {
    best_ = -1.0;
    scan(0);
    return best_;
  }

  const std::vector<double>& best_angles() const { return best_angles_; }

 private:
  void scan(int level) {
    const Eigen::VectorXd& src = level == 0 ? amps_ : buffers_[static_cast<std::size_t>(level - 1)];
    Eigen::VectorXd& dst = buffers_[static_cast<std::size_t>(level)];
    const Eigen::Index half = src.size() / 2;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      for (Eigen::Index k = 0; k < half; ++k)
        dst(k) = cos_[i] * src(k) + sin_[i] * src(half + k);
      current_[static_cast<std::size_t>(level)] = grid_[i];
      if (level == levels_ - 1) {
        const double value = std::abs(dst(0));
        if (value > best_) {
          best_ = value;
          best_angles_ = current_;
        }
      } else {
        scan(level + 1);
      }
    }
  }

  const Eigen::VectorXd& amps_;
  const std::vector<double>& grid_;
  std::vector<Eigen::VectorXd> buffers_;
  std::vector<double> cos_, sin_;
  std::vector<double> current_, best_angles_;
  int levels_;
  double best_ = -1.0;
};

double overlap_at_angles(const Eigen::VectorXd& amps, const std::vector<double>& angles) {
  Eigen::VectorXd reduced = amps;
  for (double angle : angles) {
    const Eigen::Index half = reduced.size() / 2;
    reduced = (std::cos(angle) * reduced.head(half) + std::sin(angle) * reduced.tail(half)).eval();
  }
  return std::abs(reduced(0));
}

}  // namespace

double grid_overlap_oracle(const StateVector& state, double resolution, bool refine) {
  if (state.n_qubits < 2)
    throw std::invalid_argument("grid_overlap_oracle: need at least 2 qubits");
  if (!(resolution > 0.0 && resolution < 1.0))
    throw std::invalid_argument("grid_overlap_oracle: resolution must be in (0, 1)");

  const auto steps = static_cast<std::size_t>(std::ceil(kPi / resolution));
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i) grid[i] = kPi * double(i) / double(steps);

  OverlapScanner scanner(state.amps, grid);
  double best = scanner.run();
  std::vector<double> angles = scanner.best_angles();
  if (!refine) return clamp01(best);

  // A few cyclic passes of golden-section refinement, one angle at a time.
  const double step = kPi / double(steps);
  for (int pass = 0; pass < 4; ++pass) {
    for (std::size_t q = 0; q < angles.size(); ++q) {
      const double lo = angles[q] - step;
      const double hi = angles[q] + step;
      auto line = [&](double u) {
        std::vector<double> probe = angles;
        probe[q] = lo + u * (hi - lo);
        return overlap_at_angles(state.amps, probe);
      };
      const Extremum ext = refine_maximum(line, 0.0, 1.0, 1e-12);
      angles[q] = lo + ext.x * (hi - lo);
      best = std::max(best, ext.value);
    }
  }
  return clamp01(best);
}

}  // namespace aqc
