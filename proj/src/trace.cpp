#include "aqc/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "aqc/distances.hpp"

namespace aqc {

namespace {

StateVector row_state(const ProblemSpec& spec, const Eigen::MatrixXd& grounds, Eigen::Index j) {
  return {spec.n_qubits, grounds.col(j)};
}

std::vector<double> ranks_with_ties(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::stable_sort(order.begin(), order.end(),
                   [&values](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = 0.5 * double(i + j) + 1.0;  // average 1-based rank
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("spearman: length mismatch");
  if (a.size() < 2) return std::nullopt;
  const std::vector<double> ra = ranks_with_ties(a);
  const std::vector<double> rb = ranks_with_ties(b);
  const double n = double(a.size());
  const double mean = (n + 1.0) / 2.0;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (ra[i] - mean) * (rb[i] - mean);
    var_a += (ra[i] - mean) * (ra[i] - mean);
    var_b += (rb[i] - mean) * (rb[i] - mean);
  }
  if (var_a <= 0.0 || var_b <= 0.0) return std::nullopt;
  return cov / std::sqrt(var_a * var_b);
}

namespace {

std::vector<TraceRow> trace_from_sweep(const ProblemSpec& spec, const ProfileSweep& sweep,
                                       const TraceOptions& options) {
  if (spec.n_qubits < 2)
    throw std::invalid_argument("run_trace: entanglement columns need at least 2 qubits");
  const AdiabaticProfile& profile = sweep.profile;
  const OptimizedSchedule schedule = optimized_schedule(profile, options.epsilon);
  const Eigen::Index points = profile.points();

  // F and G are measured against the numerically obtained s=1 ground state.
  const StateVector final_ground = row_state(spec, sweep.ground_states, points - 1);

  std::vector<TraceRow> rows(static_cast<std::size_t>(points));
  ProductFactors warm;
  bool have_warm = false;
  for (Eigen::Index j = 0; j < points; ++j) {
    TraceRow& row = rows[static_cast<std::size_t>(j)];
    const StateVector ground = row_state(spec, sweep.ground_states, j);
    row.s = profile.s_grid(j);
    row.t_optimized = schedule.t_of_s(j);
    row.e_minus = profile.e_minus(j);
    row.e_plus = profile.e_plus(j);
    row.gap = profile.gap(j);
    row.m_abs = profile.m_abs(j);

    row.entropy.resize(static_cast<std::size_t>(spec.n_qubits));
    row.entropy_max = 0.0;
    for (int q = 0; q < spec.n_qubits; ++q) {
      const double value = vn_entropy(schmidt_mus(ground, q));
      row.entropy[static_cast<std::size_t>(q)] = value;
      row.entropy_max = std::max(row.entropy_max, value);
    }

    if (options.geometric) {
      GeometricResult geo;
      if (spec.n_qubits == 2) {
        geo = closest_product_2q_analytic(ground);
      } else {
        geo = closest_product_alternating(ground, {}, have_warm ? &warm : nullptr);
        warm = geo.factors;
        have_warm = true;
      }
      row.d_normalized = geo.d_normalized;
      row.d_unnormalized = geo.d_unnormalized;
      row.d_hilbert_schmidt = geo.d_hilbert_schmidt;
    } else {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.d_normalized = row.d_unnormalized = row.d_hilbert_schmidt = nan;
    }

    row.f_value = fidelity_distance(ground, final_ground);
    row.g_value = geometric_separation(ground, final_ground);
  }

  for (Eigen::Index j = 0; j < points; ++j) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, j - 1);
    const Eigen::Index hi = std::min<Eigen::Index>(points - 1, j + 1);
    rows[static_cast<std::size_t>(j)].df_ds =
        (rows[static_cast<std::size_t>(hi)].f_value - rows[static_cast<std::size_t>(lo)].f_value) /
        (profile.s_grid(hi) - profile.s_grid(lo));
  }
  return rows;
}

}  // namespace

std::vector<TraceRow> run_trace(const ProblemSpec& spec, const TraceOptions& options) {
  return trace_from_sweep(spec, adiabatic_sweep(spec, options.grid_points), options);
}

std::vector<std::string> default_presets(Algorithm algorithm) {
  if (algorithm == Algorithm::ConstantTimeDJ) return {"cyan", "blue", "yellow"};
  return preset_colors();
}

int default_alpha(Algorithm algorithm) {
  return algorithm == Algorithm::ConstantTimeDJ ? 1 : 0;
}

TableBundle runtime_table_bundle(const TableRequest& request) {
  if (request.presets.empty()) throw std::invalid_argument("runtime table: no presets given");

  struct Entry {
    RuntimeRow row;
    std::vector<TraceRow> trace;
  };
  std::vector<Entry> entries;
  entries.reserve(request.presets.size());

  for (const std::string& preset : request.presets) {
    ProblemSpec spec;
    spec.algorithm = request.algorithm;
    spec.n_qubits = request.n_qubits;
    spec.initial = preset_state(preset, request.n_qubits);
    spec.alpha = request.alpha;

    TraceOptions trace_options;
    trace_options.epsilon = request.epsilon;
    trace_options.grid_points = request.grid_points;
    trace_options.geometric = false;
    const ProfileSweep sweep = adiabatic_sweep(spec, request.grid_points);
    std::vector<TraceRow> trace = trace_from_sweep(spec, sweep, trace_options);

    const AdiabaticProfile& profile = sweep.profile;
    const UnoptimizedRuntime unopt = unoptimized_runtime(spec, profile, request.epsilon);

    Entry entry;
    entry.row.preset = preset;
    entry.row.t_unoptimized = unopt.total_time;
    entry.row.s_star = unopt.s_star;
    entry.row.t_optimized = optimized_runtime(profile, request.epsilon);
    entry.row.initial_f = trace.front().f_value;
    entry.row.initial_g = trace.front().g_value;
    entry.row.max_entropy = 0.0;
    for (const TraceRow& r : trace)
      entry.row.max_entropy = std::max(entry.row.max_entropy, r.entropy_max);
    entry.trace = std::move(trace);
    entries.push_back(std::move(entry));
  }

  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row.t_unoptimized > b.row.t_unoptimized;
  });

  TableBundle bundle;
  bundle.table.algorithm = request.algorithm;
  bundle.table.n_qubits = request.n_qubits;
  bundle.table.alpha = request.alpha;
  bundle.table.epsilon = request.epsilon;
  for (Entry& entry : entries) {
    bundle.table.rows.push_back(std::move(entry.row));
    bundle.traces.push_back(std::move(entry.trace));
  }
  return bundle;
}

RuntimeTable runtime_table(const TableRequest& request) {
  return runtime_table_bundle(request).table;
}

CorrelationReport correlation_report(const RuntimeTable& table,
                                     const std::vector<std::vector<TraceRow>>& traces) {
  if (traces.size() != table.rows.size())
    throw std::invalid_argument("correlation_report: table/trace count mismatch");

  std::vector<double> f0, g0, t_unopt, t_opt;
  for (const RuntimeRow& row : table.rows) {
    f0.push_back(row.initial_f);
    g0.push_back(row.initial_g);
    t_unopt.push_back(row.t_unoptimized);
    t_opt.push_back(row.t_optimized);
  }

  CorrelationReport report;
  report.f_vs_unoptimized = spearman(f0, t_unopt);
  report.f_vs_optimized = spearman(f0, t_opt);
  report.g_vs_unoptimized = spearman(g0, t_unopt);
  report.g_vs_optimized = spearman(g0, t_opt);

  for (std::size_t i = 0; i < traces.size(); ++i) {
    const std::vector<TraceRow>& trace = traces[i];
    if (trace.empty()) throw std::invalid_argument("correlation_report: empty trace");
    PresetDiagnostics diag;
    diag.preset = table.rows[i].preset;

    double best_entropy = -1.0, best_slope = -1.0;
    double max_entropy = 0.0;
    for (const TraceRow& row : trace) max_entropy = std::max(max_entropy, row.entropy_max);
    for (const TraceRow& row : trace) {
      if (row.entropy_max > best_entropy) {
        best_entropy = row.entropy_max;
        diag.entropy_argmax_s = row.s;
      }
      if (std::abs(row.df_ds) > best_slope) {
        best_slope = std::abs(row.df_ds);
        diag.df_ds_argmax_s = row.s;
      }
    }
    diag.entropy_half_max_t = trace.front().t_optimized;
    for (const TraceRow& row : trace) {
      if (row.entropy_max >= 0.5 * max_entropy) {
        diag.entropy_half_max_t = row.t_optimized;
        break;
      }
    }
    report.presets.push_back(std::move(diag));
  }
  return report;
}

}  // namespace aqc
