#pragma once

// Adiabatic profile along the schedule and the running times derived from
// it: the global (unoptimized) bound and the locally saturated (optimized)
// schedule t(s).

#include <Eigen/Core>

#include "aqc/algorithms.hpp"
#include "aqc/numerics.hpp"

namespace aqc {

struct AdiabaticProfile {
  Eigen::VectorXd s_grid;   // uniform ascending samples of [0, 1]
  Eigen::VectorXd e_minus;  // ground energy per sample
  Eigen::VectorXd e_plus;   // first excited energy per sample
  Eigen::VectorXd gap;      // e_plus - e_minus, strictly positive
  Eigen::VectorXd m_abs;    // |<E-| dH/ds |E+>| per sample

  Eigen::Index points() const { return s_grid.size(); }
};

// Profile plus the sign-continuous ground state at each sample (column j
// belongs to s_grid[j]); the trace module reads the states.
struct ProfileSweep {
  AdiabaticProfile profile;
  Eigen::MatrixXd ground_states;
};

struct PointDiagnostics {
  double e_minus = 0.0;
  double e_plus = 0.0;
  double gap = 0.0;
  double m_abs = 0.0;
  Eigen::VectorXd ground;
};

// Precomputed projector pair for repeated evaluation along the schedule.
class HamiltonianTrack {
 public:
  explicit HamiltonianTrack(const ProblemSpec& spec);

  Eigen::MatrixXd at(double s) const;
  const Eigen::MatrixXd& derivative() const { return dh_; }

  // Diagonalizes H(s) and evaluates the gap and |<E-|dH/ds|E+>|. At the
  // schedule endpoints the level holding E+ is degenerate; the returned E+
  // is the s->boundary limit (projection of dH/ds |E-> onto the degenerate
  // eigenspace), which keeps m_abs continuous in s.
  PointDiagnostics diagnostics(double s) const;

 private:
  Eigen::MatrixXd h0_, h1_, dh_;
};

AdiabaticProfile adiabatic_profile(const ProblemSpec& spec, int grid_points);
ProfileSweep adiabatic_sweep(const ProblemSpec& spec, int grid_points);

struct UnoptimizedRuntime {
  double total_time = 0.0;
  double s_star = 0.0;  // location of the profile maximum
};

// T = max_s m_abs / (eps * gap^2); the grid maximum is sharpened by a
// golden-section pass over fresh evaluations.
UnoptimizedRuntime unoptimized_runtime(const ProblemSpec& spec, const AdiabaticProfile& profile,
                                       double eps);

struct OptimizedSchedule {
  Eigen::VectorXd s_grid;
  Eigen::VectorXd t_of_s;  // cumulative optimized time, t(0) = 0
  double total_time = 0.0;
};

// dt = ds * m_abs / (eps * gap^2), accumulated by the trapezoid rule.
OptimizedSchedule optimized_schedule(const AdiabaticProfile& profile, double eps);
double optimized_runtime(const AdiabaticProfile& profile, double eps);

// Alternative orientation (gap^2 / m_abs) of the local condition. Kept as a
// diagnostic only; exposed through the --printed-trun flag.
double inverse_orientation_runtime(const AdiabaticProfile& profile, double eps);

}  // namespace aqc
