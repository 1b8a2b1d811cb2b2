#include "aqc/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "aqc/distances.hpp"
#include "aqc/entanglement.hpp"
#include "aqc/reference.hpp"
#include "aqc/schedule.hpp"
#include "aqc/trace.hpp"

namespace aqc {

namespace {

constexpr std::uint64_t kSelftestSeed = 0xA5EED123;
constexpr int kSpectrumGridPoints = 2001;

class Checker {
 public:
  Checker(std::ostream& out, SelftestReport& report) : out_(out), report_(report) {}

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      ++report_.passed;
      out_ << "PASS " << name;
    } else {
      ++report_.failed;
      report_.failures.push_back(name);
      out_ << "FAIL " << name;
    }
    if (!detail.empty()) out_ << "  (" << detail << ")";
    out_ << "\n";
  }

  // A check documented to fail; failing counts as expected, passing is an
  // error.
  void expect_fail(const std::string& name, bool ok, const std::string& detail = "") {
    if (!ok) {
      ++report_.xfailed;
      out_ << "XFAIL " << name;
    } else {
      ++report_.failed;
      report_.failures.push_back(name + " [unexpected pass]");
      out_ << "UNEXPECTED-PASS " << name;
    }
    if (!detail.empty()) out_ << "  (" << detail << ")";
    out_ << "\n";
  }

  void skip(const std::string& name, const std::string& why) {
    ++report_.skipped;
    out_ << "SKIP " << name << "  (" << why << ")\n";
  }

  void report(const std::string& line) { out_ << "REPORT " << line << "\n"; }

 private:
  std::ostream& out_;
  SelftestReport& report_;
};

std::string fmt(const char* format, ...) {
  char buffer[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1p-53; }

StateVector random_state(std::mt19937_64& rng, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Eigen::VectorXd amps(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    // Box-Muller on explicitly constructed uniforms so the stream does not
    // depend on the standard library's distribution internals.
    const double u1 = std::max(uniform01(rng), 0x1p-53);
    const double u2 = uniform01(rng);
    amps(i) = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }
  return normalized_state(n_qubits, std::move(amps));
}

void spectrum_checks(Checker& checker) {
  for (Algorithm algorithm : {Algorithm::Search, Algorithm::DeutschJozsa}) {
    for (int n = 2; n <= 4; ++n) {
      ProblemSpec spec;
      spec.algorithm = algorithm;
      spec.n_qubits = n;
      spec.initial = uniform_state(n);
      spec.alpha = 0;
      const HamiltonianTrack track(spec);
      double worst_low = 0.0, worst_degenerate = 0.0;
      for (int j = 0; j < kSpectrumGridPoints; ++j) {
        const double s = double(j) / double(kSpectrumGridPoints - 1);
        const EigenSystem es = jacobi_eigensystem(track.at(s));
        const LowSpectrum analytic = analytic_low_spectrum(spec, s);
        worst_low = std::max(worst_low, std::abs(es.values(0) - analytic.e_minus));
        worst_low = std::max(worst_low, std::abs(es.values(1) - analytic.e_plus));
        for (Eigen::Index k = 2; k < es.values.size(); ++k)
          worst_degenerate = std::max(worst_degenerate, std::abs(es.values(k) - 1.0));
      }
      const std::string label =
          std::string(algorithm_name(algorithm)) + " n=" + std::to_string(n);
      checker.check("spectrum-oracle " + label, worst_low <= 1e-9,
                    fmt("max deviation %.3e", worst_low));
      checker.check("degenerate-level " + label, worst_degenerate <= 1e-9,
                    fmt("max deviation %.3e", worst_degenerate));
    }
  }

  for (int n = 2; n <= 3; ++n) {
    ProblemSpec spec;
    spec.algorithm = Algorithm::ConstantTimeDJ;
    spec.n_qubits = n;
    spec.initial = uniform_state(n);
    spec.alpha = 1;
    const HamiltonianTrack track(spec);
    double worst = 0.0;
    for (int j = 0; j <= 100; ++j) {
      const double s = double(j) / 100.0;
      const EigenSystem es = jacobi_eigensystem(track.at(s));
      const LowSpectrum analytic = analytic_low_spectrum(spec, s);
      worst = std::max(worst, std::abs(es.values(0) - analytic.e_minus));
      worst = std::max(worst, std::abs(es.values(1) - analytic.e_plus));
    }
    checker.check("ctdj-analytic-gap n=" + std::to_string(n), worst <= 1e-9,
                  fmt("max deviation %.3e", worst));
  }
}

void entanglement_checks(Checker& checker, bool fast) {
  std::mt19937_64 rng(kSelftestSeed);

  for (int n = 2; n <= 3; ++n) {
    double worst_sum = 0.0, worst_eig = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const StateVector state = random_state(rng, n);
      for (int q = 0; q < n; ++q) {
        const SchmidtPair mus = schmidt_mus(state, q);
        worst_sum = std::max(worst_sum, std::abs(mus.mu_plus + mus.mu_minus - 1.0));
        const Eigen::Matrix2d rho = reduced_density(state, q);
        const double mean = 0.5 * (rho(0, 0) + rho(1, 1));
        const double radius =
            std::sqrt(0.25 * std::pow(rho(0, 0) - rho(1, 1), 2) + rho(0, 1) * rho(0, 1));
        worst_eig = std::max(worst_eig, std::abs(mus.mu_plus - (mean + radius)));
      }
    }
    checker.check("mu-identity n=" + std::to_string(n),
                  worst_sum <= 1e-12 && worst_eig <= 1e-10,
                  fmt("sum %.3e, eig %.3e", worst_sum, worst_eig));
  }

  double worst_lambda_mu = 0.0, worst_norm_mu = 0.0, worst_agree = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const StateVector state = random_state(rng, 2);
    const GeometricResult analytic = closest_product_2q_analytic(state);
    const double mu_plus = schmidt_mus(state, 0).mu_plus;
    worst_lambda_mu =
        std::max(worst_lambda_mu, std::abs(analytic.overlap * analytic.overlap - mu_plus));
    worst_norm_mu = std::max(worst_norm_mu, std::abs(analytic.factors.norm_product() - mu_plus));
    const GeometricResult alternating = closest_product_alternating(state);
    worst_agree = std::max(worst_agree, std::abs(analytic.overlap - alternating.overlap));
  }
  checker.check("lambda-mu-identity n=2", worst_lambda_mu <= 1e-8,
                fmt("max |lambda^2 - mu+| %.3e", worst_lambda_mu));
  checker.check("norm-product-mu-identity n=2", worst_norm_mu <= 1e-8,
                fmt("max |NaNb - mu+| %.3e", worst_norm_mu));
  checker.check("analytic-vs-alternating n=2", worst_agree <= 1e-8,
                fmt("max overlap disagreement %.3e", worst_agree));

  double worst_consistency = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector state = random_state(rng, 3);
    const GeometricResult result = closest_product_alternating(state);
    for (double r : consistency_residuals(state, result.factors))
      worst_consistency = std::max(worst_consistency, r);
  }
  checker.check("consistency-residuals n=3", worst_consistency <= 1e-8,
                fmt("max residual %.3e", worst_consistency));

  if (fast) {
    checker.skip("grid-oracle n=3", "fast mode");
  } else {
    StateVector ghz = make_state(3, Eigen::VectorXd::Zero(8));
    ghz.amps(0) = ghz.amps(7) = 1.0 / std::sqrt(2.0);
    StateVector w = make_state(3, Eigen::VectorXd::Zero(8));
    w.amps(1) = w.amps(2) = w.amps(4) = 1.0 / std::sqrt(3.0);

    double worst = 0.0;
    std::vector<StateVector> cases{ghz, w};
    for (int trial = 0; trial < 3; ++trial) cases.push_back(random_state(rng, 3));
    for (const StateVector& state : cases) {
      const double oracle = grid_overlap_oracle(state, 1e-2);
      const double solver = closest_product_alternating(state).overlap;
      worst = std::max(worst, std::abs(oracle - solver));
    }
    checker.check("grid-oracle n=3", worst <= 1e-4, fmt("max deviation %.3e", worst));
  }
}

// Rebuild a profile from table-bundle trace rows so the inverse-orientation
// integral can be evaluated without re-diagonalizing.
AdiabaticProfile profile_from_trace(const std::vector<TraceRow>& trace) {
  AdiabaticProfile profile;
  const Eigen::Index points = static_cast<Eigen::Index>(trace.size());
  profile.s_grid.resize(points);
  profile.e_minus.resize(points);
  profile.e_plus.resize(points);
  profile.gap.resize(points);
  profile.m_abs.resize(points);
  for (Eigen::Index j = 0; j < points; ++j) {
    const TraceRow& row = trace[static_cast<std::size_t>(j)];
    profile.s_grid(j) = row.s;
    profile.e_minus(j) = row.e_minus;
    profile.e_plus(j) = row.e_plus;
    profile.gap(j) = row.gap;
    profile.m_abs(j) = row.m_abs;
  }
  return profile;
}

void table_checks(Checker& checker, bool printed_trun) {
  for (const ReferenceTable& reference : reference_tables()) {
    TableRequest request;
    request.algorithm = reference.algorithm;
    request.n_qubits = reference.n_qubits;
    request.alpha = reference.alpha;
    for (const auto& [preset, value] : reference.unoptimized) request.presets.push_back(preset);
    request.epsilon = reference_epsilon();
    const TableBundle bundle = runtime_table_bundle(request);
    const std::string label = std::string(algorithm_name(reference.algorithm)) +
                              " n=" + std::to_string(reference.n_qubits);

    bool unopt_ok = true, opt_ok = true;
    std::ostringstream unopt_detail, opt_detail;
    for (std::size_t i = 0; i < bundle.table.rows.size(); ++i) {
      const RuntimeRow& row = bundle.table.rows[i];
      const double expected_unopt = reference.unoptimized.at(row.preset);
      if (!within_reference_tolerance(row.t_unoptimized, expected_unopt)) unopt_ok = false;
      unopt_detail << (i > 0 ? ", " : "") << row.preset << ' '
                   << fmt("%.1f/%.0f", row.t_unoptimized, expected_unopt);

      const double expected_opt = reference.optimized.at(row.preset);
      const double optimized =
          printed_trun
              ? inverse_orientation_runtime(profile_from_trace(bundle.traces[i]),
                                            reference_epsilon())
              : row.t_optimized;
      if (!within_reference_tolerance(optimized, expected_opt)) opt_ok = false;
      opt_detail << (i > 0 ? ", " : "") << row.preset << ' '
                 << fmt("%.1f/%.0f", optimized, expected_opt);
    }
    checker.check("table " + label + " unoptimized", unopt_ok, unopt_detail.str());
    if (printed_trun) {
      checker.expect_fail("table " + label + " optimized [printed-trun]", opt_ok,
                          opt_detail.str());
    } else {
      checker.check("table " + label + " optimized", opt_ok, opt_detail.str());
    }

    // Ordering correlations: the F correlations are exact rank matches; the
    // G correlations are emitted for inspection (they are not rank-exact for
    // every family).
    const CorrelationReport correlations = correlation_report(bundle.table, bundle.traces);
    const bool f_ok = correlations.f_vs_unoptimized.has_value() &&
                      correlations.f_vs_optimized.has_value() &&
                      *correlations.f_vs_unoptimized >= 1.0 - 1e-12 &&
                      *correlations.f_vs_optimized >= 1.0 - 1e-12;
    checker.check("rank-correlation-F " + label, f_ok,
                  fmt("T_unopt %.4f, T_opt %.4f",
                      correlations.f_vs_unoptimized.value_or(std::nan("")),
                      correlations.f_vs_optimized.value_or(std::nan(""))));
    std::ostringstream g_line;
    g_line << "rank-correlation-G " << label << ": T_unopt "
           << (correlations.g_vs_unoptimized.has_value()
                   ? fmt("%.4f", *correlations.g_vs_unoptimized)
                   : std::string("n/a"))
           << ", T_opt "
           << (correlations.g_vs_optimized.has_value()
                   ? fmt("%.4f", *correlations.g_vs_optimized)
                   : std::string("n/a"));
    checker.report(g_line.str());
  }
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options, std::ostream& out) {
  SelftestReport report;
  Checker checker(out, report);

  spectrum_checks(checker);
  entanglement_checks(checker, options.fast);
  table_checks(checker, options.printed_trun);

  out << "selftest: " << report.passed << " passed, " << report.failed << " failed, "
      << report.xfailed << " expected failures, " << report.skipped << " skipped\n";
  if (!report.failures.empty()) {
    out << "failed checks:\n";
    for (const std::string& name : report.failures) out << "  " << name << "\n";
  }
  return report;
}

}  // namespace aqc
