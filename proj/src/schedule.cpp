#include "aqc/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "aqc/parallel.hpp"

namespace aqc {

namespace {

constexpr int kMinGridPoints = 1001;
constexpr double kLowestPairTol = 1e-13;     // ground/first-excited collision
constexpr double kUpperLevelTol = 1e-10;     // E+ vs higher-level splitting

void require_positive_eps(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("accuracy eps must be positive");
}

Eigen::VectorXd condition_ratio(const AdiabaticProfile& profile) {
  return (profile.m_abs.array() / profile.gap.array().square()).matrix();
}

}  // namespace

HamiltonianTrack::HamiltonianTrack(const ProblemSpec& spec) {
  validate(spec);
  h0_ = projector_hamiltonian(spec.initial);
  h1_ = projector_hamiltonian(final_state(spec));
  dh_ = h1_ - h0_;
}

Eigen::MatrixXd HamiltonianTrack::at(double s) const {
  const SchedulePoint pt = schedule_point(s);
  return pt.f * h0_ + pt.g * h1_;
}

PointDiagnostics HamiltonianTrack::diagnostics(double s) const {
  const EigenSystem es = jacobi_eigensystem(at(s));
  const double gap = es.values(1) - es.values(0);
  if (gap < kLowestPairTol) {
    std::ostringstream msg;
    msg << "degenerate lowest eigenvalue pair at s=" << s << " (gap " << gap << ")";
    throw degeneracy_error(msg.str());
  }

  Eigen::VectorXd ground = es.vectors.col(0);
  Eigen::VectorXd excited = es.vectors.col(1);
  Eigen::Index deg_end = 2;
  const Eigen::Index n = es.values.size();
  while (deg_end < n && es.values(deg_end) - es.values(1) < kUpperLevelTol) ++deg_end;
  if (deg_end > 2) {
    const Eigen::VectorXd w = dh_ * ground;
    Eigen::VectorXd projected = Eigen::VectorXd::Zero(w.size());
    for (Eigen::Index k = 1; k < deg_end; ++k)
      projected += es.vectors.col(k) * es.vectors.col(k).dot(w);
    const double len = projected.norm();
    if (len > 1e-14) excited = projected / len;
  }

  const double m_abs = std::abs(ground.dot(dh_ * excited));
  return {es.values(0), es.values(1), gap, m_abs, std::move(ground)};
}

ProfileSweep adiabatic_sweep(const ProblemSpec& spec, int grid_points) {
  if (grid_points < kMinGridPoints)
    throw std::invalid_argument("adiabatic profile needs at least 1001 grid points");
  const HamiltonianTrack track(spec);
  const Eigen::Index dim = spec.initial.dim();
  const std::size_t points = static_cast<std::size_t>(grid_points);

  std::vector<PointDiagnostics> samples(points);
  parallel_for_index(points, [&](std::size_t j) {
    const double s = double(j) / double(points - 1);
    samples[j] = track.diagnostics(s);
  });

  ProfileSweep out;
  out.profile.s_grid.resize(grid_points);
  out.profile.e_minus.resize(grid_points);
  out.profile.e_plus.resize(grid_points);
  out.profile.gap.resize(grid_points);
  out.profile.m_abs.resize(grid_points);
  out.ground_states.resize(dim, grid_points);

  Eigen::VectorXd previous;
  for (std::size_t j = 0; j < points; ++j) {
    const Eigen::Index col = static_cast<Eigen::Index>(j);
    out.profile.s_grid(col) = double(j) / double(points - 1);
    out.profile.e_minus(col) = samples[j].e_minus;
    out.profile.e_plus(col) = samples[j].e_plus;
    out.profile.gap(col) = samples[j].gap;
    out.profile.m_abs(col) = samples[j].m_abs;
    Eigen::VectorXd ground =
        j == 0 ? fix_gauge(samples[j].ground) : fix_gauge(previous, samples[j].ground);
    out.ground_states.col(col) = ground;
    previous = std::move(ground);
  }
  return out;
}

AdiabaticProfile adiabatic_profile(const ProblemSpec& spec, int grid_points) {
  return adiabatic_sweep(spec, grid_points).profile;
}

UnoptimizedRuntime unoptimized_runtime(const ProblemSpec& spec, const AdiabaticProfile& profile,
                                       double eps) {
  require_positive_eps(eps);
  if (profile.points() < 2) throw std::invalid_argument("profile is empty");
  const Eigen::VectorXd ratio = condition_ratio(profile);
  Eigen::Index peak = 0;
  ratio.maxCoeff(&peak);

  const HamiltonianTrack track(spec);
  auto ratio_at = [&track](double s) {
    const PointDiagnostics d = track.diagnostics(s);
    return d.m_abs / (d.gap * d.gap);
  };
  const Eigen::Index lo = std::max<Eigen::Index>(0, peak - 1);
  const Eigen::Index hi = std::min<Eigen::Index>(profile.points() - 1, peak + 1);
  const Extremum refined = refine_maximum(ratio_at, profile.s_grid(lo), profile.s_grid(hi));

  if (refined.value >= ratio(peak)) return {refined.value / eps, refined.x};
  return {ratio(peak) / eps, profile.s_grid(peak)};
}

OptimizedSchedule optimized_schedule(const AdiabaticProfile& profile, double eps) {
  require_positive_eps(eps);
  const Eigen::VectorXd integrand = condition_ratio(profile) / eps;
  OptimizedSchedule out;
  out.s_grid = profile.s_grid;
  out.t_of_s = cumulative_trapezoid(profile.s_grid, integrand);
  out.total_time = out.t_of_s(out.t_of_s.size() - 1);
  return out;
}

double optimized_runtime(const AdiabaticProfile& profile, double eps) {
  return optimized_schedule(profile, eps).total_time;
}

double inverse_orientation_runtime(const AdiabaticProfile& profile, double eps) {
  require_positive_eps(eps);
  const Eigen::VectorXd integrand =
      (profile.gap.array().square() / profile.m_abs.array()).matrix() * eps;
  const Eigen::VectorXd cumulative = cumulative_trapezoid(profile.s_grid, integrand);
  return cumulative(cumulative.size() - 1);
}

}  // namespace aqc
