#pragma once

// Dense symmetric eigensolver and quadrature primitives shared by the rest
// of the library. Everything here is a pure function of its inputs and can
// be called concurrently.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aqc {

// Runtime numerical failures (iteration limits, unexpected degeneracies).
// Contract violations throw std::invalid_argument instead.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class convergence_error : public numerical_error {
 public:
  convergence_error(const std::string& what, double residual)
      : numerical_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

class degeneracy_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

template <typename Scalar>
struct EigenSystemT {
  Eigen::Vector<Scalar, Eigen::Dynamic> values;                   // ascending
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;  // orthonormal columns
};
using EigenSystem = EigenSystemT<double>;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& a,
                  typename Derived::Scalar tol = typename Derived::Scalar(1e-14)) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

namespace detail {

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffTolerance = 1e-12;  // relative to ||A||_F

template <typename Scalar>
Scalar off_diagonal_norm(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  Scalar sum = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(Scalar(2) * sum);
}

}  // namespace detail

// Full spectrum of a dense symmetric matrix by cyclic Jacobi sweeps.
// Deterministic for identical input bits. Eigenvalues come back ascending
// with a stable tie-break on the original column index, so degenerate levels
// are reproducible.
template <typename Derived>
EigenSystemT<typename Derived::Scalar> jacobi_eigensystem(const Eigen::MatrixBase<Derived>& a_in) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix a = a_in;
  const Eigen::Index n = a.rows();
  if (n < 2 || a.cols() != n)
    throw std::invalid_argument("jacobi_eigensystem: need a square matrix with dim >= 2");
  if (!is_symmetric(a))
    throw std::invalid_argument("jacobi_eigensystem: matrix violates the symmetry tolerance");
  a = ((a + a.transpose()) / Scalar(2)).eval();

  const Scalar off_tol =
      Scalar(detail::kJacobiOffTolerance) * std::max<Scalar>(Scalar(1), a.norm());

  Matrix v = Matrix::Identity(n, n);
  bool converged = false;
  Scalar off = 0;
  for (int sweep = 0; sweep < detail::kJacobiMaxSweeps; ++sweep) {
    off = detail::off_diagonal_norm(a);
    if (off <= off_tol) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar tau = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = tau >= Scalar(0)
                             ? Scalar(1) / (tau + std::sqrt(Scalar(1) + tau * tau))
                             : Scalar(-1) / (-tau + std::sqrt(Scalar(1) + tau * tau));
        const Scalar c = Scalar(1) / std::sqrt(Scalar(1) + t * t);
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = Scalar(0);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged)
    throw convergence_error("jacobi_eigensystem: no convergence after " +
                                std::to_string(detail::kJacobiMaxSweeps) +
                                " sweeps, off-diagonal residual " + std::to_string(double(off)),
                            double(off));

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&a](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  EigenSystemT<Scalar> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

// Sign convention for eigenvectors. Without a reference the largest-magnitude
// component is made positive (ties resolve to the lowest index); with a
// reference the sign is chosen so that dot(reference, result) >= 0.
// Idempotent in both forms.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> fix_gauge(
    const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Eigen::Vector<Scalar, Eigen::Dynamic> out = v;
  Eigen::Index best = -1;
  Scalar best_mag = 0;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const Scalar mag = std::abs(out(i));
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best < 0) throw std::invalid_argument("fix_gauge: zero vector");
  if (out(best) < Scalar(0)) out = -out;
  return out;
}

template <typename DerivedR, typename DerivedV>
Eigen::Vector<typename DerivedV::Scalar, Eigen::Dynamic> fix_gauge(
    const Eigen::MatrixBase<DerivedR>& reference, const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedV::Scalar;
  if (reference.size() != v.size())
    throw std::invalid_argument("fix_gauge: reference and vector dimensions differ");
  Eigen::Vector<Scalar, Eigen::Dynamic> out = v;
  if (out.isZero(Scalar(0))) throw std::invalid_argument("fix_gauge: zero vector");
  if (reference.dot(out) < Scalar(0)) out = -out;
  return out;
}

// Cumulative trapezoid rule on an ascending grid; result[0] = 0 and the last
// entry approximates the full integral. Summation runs left to right so the
// output is bit-reproducible.
template <typename DerivedX, typename DerivedY>
Eigen::Vector<typename DerivedX::Scalar, Eigen::Dynamic> cumulative_trapezoid(
    const Eigen::MatrixBase<DerivedX>& xs, const Eigen::MatrixBase<DerivedY>& ys) {
  using Scalar = typename DerivedX::Scalar;
  if (xs.size() != ys.size())
    throw std::invalid_argument("cumulative_trapezoid: grid and sample lengths differ");
  if (xs.size() < 1) throw std::invalid_argument("cumulative_trapezoid: empty grid");
  Eigen::Vector<Scalar, Eigen::Dynamic> out(xs.size());
  out(0) = Scalar(0);
  for (Eigen::Index i = 1; i < xs.size(); ++i) {
    const Scalar dx = xs(i) - xs(i - 1);
    if (!(dx > Scalar(0)))
      throw std::invalid_argument("cumulative_trapezoid: grid is not strictly ascending");
    out(i) = out(i - 1) + dx * (ys(i) + ys(i - 1)) / Scalar(2);
  }
  return out;
}

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section refinement of a scalar maximum inside [lo, hi] in [0, 1].
// Shrinks the bracket to width <= bracket_tol and returns the best evaluated
// interior point.
template <typename F>
Extremum refine_maximum(F&& f, double lo, double hi, double bracket_tol = 1e-10) {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo < hi))
    throw std::invalid_argument("refine_maximum: invalid bracket");
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  Extremum best = f1 >= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
  while (b - a > bracket_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
      if (f2 > best.value) best = {x2, f2};
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
      if (f1 > best.value) best = {x1, f1};
    }
  }
  return best;
}

}  // namespace aqc
