// aqc: adiabatic quantum algorithm simulator and analysis toolkit.
//
// Subcommands:
//   run              trace a problem over the schedule and emit CSV
//   runtimes         unoptimized/optimized running-time tables
//   closest-product  closest-product-state analysis of one state (JSON)
//   selftest         built-in verification suite
//
// Exit codes: 0 success, 2 usage/configuration error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aqc/config.hpp"
#include "aqc/csv.hpp"
#include "aqc/entanglement.hpp"
#include "aqc/reference.hpp"
#include "aqc/report.hpp"
#include "aqc/selftest.hpp"
#include "aqc/svg.hpp"
#include "aqc/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonProblemFlags {
  std::string algorithm = "search";
  int qubits = 2;
  double epsilon = 0.01;
  int grid_points = 20001;
};

void add_problem_flags(CLI::App* cmd, CommonProblemFlags* flags) {
  cmd->add_option("--algorithm", flags->algorithm, "search, dj, or ctdj")
      ->default_val(flags->algorithm);
  cmd->add_option("--qubits", flags->qubits, "number of qubits")->default_val(flags->qubits);
  cmd->add_option("--epsilon", flags->epsilon, "adiabatic accuracy parameter")
      ->default_val(flags->epsilon);
  cmd->add_option("--grid-points", flags->grid_points, "schedule samples (>= 1001)")
      ->default_val(flags->grid_points);
}

void write_text_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  file << content;
}

int cmd_run(const aqc::RunConfig& config, const std::string& svg_path,
            const std::string& svg_columns, const std::string& svg_x) {
  const aqc::ProblemSpec spec = aqc::problem_from_config(config, &std::cerr);
  aqc::TraceOptions options;
  options.epsilon = config.epsilon;
  options.grid_points = config.grid_points;
  const std::vector<aqc::TraceRow> rows = aqc::run_trace(spec, options);
  write_text_output(config.output, aqc::trace_csv_string(spec.n_qubits, rows));

  if (!svg_path.empty()) {
    aqc::SvgOptions svg;
    if (!svg_columns.empty()) {
      svg.columns.clear();
      std::istringstream stream(svg_columns);
      std::string column;
      while (std::getline(stream, column, ',')) svg.columns.push_back(column);
    }
    svg.x_column = svg_x;
    write_text_output(svg_path, aqc::render_trace_svg(spec.n_qubits, rows, svg));
  }
  return kExitOk;
}

int cmd_runtimes(const CommonProblemFlags& flags, std::optional<int> alpha,
                 const std::vector<std::string>& presets, bool check, bool correlations,
                 bool printed_trun, const std::string& json_path) {
  aqc::TableRequest request;
  request.algorithm = aqc::parse_algorithm(flags.algorithm);
  request.n_qubits = flags.qubits;
  request.alpha = alpha.value_or(aqc::default_alpha(request.algorithm));
  request.presets = presets.empty() ? aqc::default_presets(request.algorithm) : presets;
  request.epsilon = flags.epsilon;
  request.grid_points = flags.grid_points;
  if (!(request.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  const aqc::TableBundle bundle = aqc::runtime_table_bundle(request);
  aqc::print_table_text(std::cout, bundle.table);

  aqc::ordered_json doc = aqc::table_to_json(bundle.table);
  if (printed_trun) {
    // Diagnostic: the alternative orientation of the local condition,
    // integrating gap^2/|m| instead of its reciprocal.
    std::cout << "printed-trun diagnostic (eps * integral of gap^2/|m|):\n";
    for (std::size_t i = 0; i < bundle.table.rows.size(); ++i) {
      aqc::AdiabaticProfile profile;
      const auto& trace = bundle.traces[i];
      const Eigen::Index points = static_cast<Eigen::Index>(trace.size());
      profile.s_grid.resize(points);
      profile.gap.resize(points);
      profile.m_abs.resize(points);
      profile.e_minus = profile.e_plus = Eigen::VectorXd::Zero(points);
      for (Eigen::Index j = 0; j < points; ++j) {
        profile.s_grid(j) = trace[static_cast<std::size_t>(j)].s;
        profile.gap(j) = trace[static_cast<std::size_t>(j)].gap;
        profile.m_abs(j) = trace[static_cast<std::size_t>(j)].m_abs;
      }
      const double value = aqc::inverse_orientation_runtime(profile, request.epsilon);
      std::cout << "  " << bundle.table.rows[i].preset << ": " << aqc::format_g17(value) << "\n";
      doc["rows"][i]["t_printed_trun"] = value;
    }
  }

  if (correlations) {
    const aqc::CorrelationReport report = aqc::correlation_report(bundle.table, bundle.traces);
    aqc::print_correlation_text(std::cout, report);
    doc["correlations"] = aqc::correlation_to_json(report);
  }

  int status = kExitOk;
  if (check) {
    const aqc::ReferenceTable* reference =
        aqc::find_reference_table(request.algorithm, request.n_qubits, request.alpha);
    if (reference == nullptr) {
      std::cout << "check: no reference values for this algorithm/qubits/alpha; skipped\n";
    } else if (flags.epsilon != aqc::reference_epsilon()) {
      std::cout << "check: reference values are defined at eps=" << aqc::reference_epsilon()
                << "; skipped\n";
    } else {
      bool all_ok = true;
      for (const aqc::RuntimeRow& row : bundle.table.rows) {
        const auto unopt = reference->unoptimized.find(row.preset);
        const auto opt = reference->optimized.find(row.preset);
        if (unopt == reference->unoptimized.end() || opt == reference->optimized.end()) {
          std::cout << "check " << row.preset << ": no reference entry\n";
          continue;
        }
        const bool unopt_ok = aqc::within_reference_tolerance(row.t_unoptimized, unopt->second);
        const bool opt_ok = aqc::within_reference_tolerance(row.t_optimized, opt->second);
        std::cout << "check " << row.preset << ": unoptimized "
                  << (unopt_ok ? "ok" : "MISMATCH") << " (" << row.t_unoptimized << " vs "
                  << unopt->second << "), optimized " << (opt_ok ? "ok" : "MISMATCH") << " ("
                  << row.t_optimized << " vs " << opt->second << ")\n";
        all_ok = all_ok && unopt_ok && opt_ok;
      }
      if (!all_ok) status = 1;
    }
  }

  if (!json_path.empty()) {
    std::ofstream file(json_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + json_path + "'");
    file << doc.dump(2) << "\n";
  }
  return status;
}

int cmd_closest_product(const std::string& amps_text, int restarts) {
  const std::vector<double> values = aqc::parse_amplitude_list(amps_text);
  int n_qubits = 0;
  while ((std::size_t(1) << (n_qubits + 1)) <= values.size()) ++n_qubits;
  if (values.size() < 4 || (std::size_t(1) << n_qubits) != values.size())
    throw std::invalid_argument("amplitude count must be a power of two >= 4");

  Eigen::VectorXd amps(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) amps(static_cast<Eigen::Index>(i)) = values[i];
  const aqc::StateVector state = aqc::normalized_state(n_qubits, std::move(amps));

  aqc::GeometricResult result;
  if (n_qubits == 2) {
    result = aqc::closest_product_2q_analytic(state);
  } else {
    aqc::AlternatingOptions options;
    options.restarts = restarts;
    result = aqc::closest_product_alternating(state, options);
  }
  std::cout << aqc::geometric_to_json(state, result).dump(2) << "\n";
  return kExitOk;
}

int cmd_selftest(bool fast, bool printed_trun) {
  aqc::SelftestOptions options;
  options.fast = fast;
  options.printed_trun = printed_trun;
  const aqc::SelftestReport report = aqc::run_selftest(options, std::cout);
  return report.ok() ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adiabatic quantum algorithm simulator and analysis toolkit"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "trace a problem over the schedule and emit CSV");
  CommonProblemFlags run_flags;
  add_problem_flags(run, &run_flags);
  std::string initial = "green";
  std::optional<int> alpha;
  int marked_index = 0;
  std::string output, format = "csv", svg_path, svg_columns, svg_x = "s";
  run->add_option("--initial", initial, "preset color, 'uniform', or amplitude list")
      ->default_val(initial);
  run->add_option("--alpha", alpha, "0 or 1 (dj and ctdj only)");
  run->add_option("--marked-index", marked_index, "marked basis index (search only)")
      ->default_val(marked_index);
  run->add_option("--output", output, "output path (default: stdout)");
  run->add_option("--format", format, "output format (csv)")->default_val(format);
  run->add_option("--svg", svg_path, "also write a polyline plot to this path");
  run->add_option("--svg-columns", svg_columns, "comma-separated plot columns");
  run->add_option("--svg-x", svg_x, "x-axis column (s or t_opt)")->default_val(svg_x);

  // runtimes
  auto* runtimes = app.add_subcommand("runtimes", "running-time tables per preset");
  CommonProblemFlags runtimes_flags;
  add_problem_flags(runtimes, &runtimes_flags);
  std::optional<int> runtimes_alpha;
  std::vector<std::string> presets;
  bool check = false, correlations = false, runtimes_printed_trun = false;
  std::string json_path;
  runtimes->add_option("--alpha", runtimes_alpha, "0 or 1 (dj and ctdj only)");
  runtimes->add_option("--presets", presets, "preset colors (default: published set)")
      ->delimiter(',');
  runtimes->add_flag("--check", check, "compare against the embedded reference values");
  runtimes->add_flag("--correlations", correlations, "print the ordering-correlation report");
  runtimes->add_flag("--printed-trun", runtimes_printed_trun,
                     "also evaluate the inverse orientation of the local condition");
  runtimes->add_option("--json", json_path, "write the table as JSON to this path");

  // closest-product
  auto* closest = app.add_subcommand("closest-product", "closest product state of one state");
  std::string amps_text;
  int restarts = 32;
  closest->add_option("--amps", amps_text, "comma-separated amplitudes (power of two >= 4)")
      ->required();
  closest->add_option("--restarts", restarts, "multistart count for n >= 3")
      ->default_val(restarts);

  // selftest
  auto* selftest = app.add_subcommand("selftest", "built-in verification suite");
  bool fast = false, selftest_printed_trun = false;
  selftest->add_flag("--fast", fast, "skip the n=3 grid-oracle comparisons");
  selftest->add_flag("--printed-trun", selftest_printed_trun,
                     "evaluate the inverse orientation; optimized-table checks expect failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (run->parsed()) {
      if (format != "csv") throw std::invalid_argument("run supports only --format csv");
      aqc::RunConfig config;
      config.algorithm = aqc::parse_algorithm(run_flags.algorithm);
      config.n_qubits = run_flags.qubits;
      config.initial = initial;
      config.alpha = alpha;
      config.marked_index = marked_index;
      config.epsilon = run_flags.epsilon;
      config.grid_points = run_flags.grid_points;
      config.output = output;
      config.format = format;
      return cmd_run(config, svg_path, svg_columns, svg_x);
    }
    if (runtimes->parsed())
      return cmd_runtimes(runtimes_flags, runtimes_alpha, presets, check, correlations,
                          runtimes_printed_trun, json_path);
    if (closest->parsed()) return cmd_closest_product(amps_text, restarts);
    if (selftest->parsed()) return cmd_selftest(fast, selftest_printed_trun);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const aqc::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
