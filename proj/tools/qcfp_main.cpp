#include <cstddef>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcfp/qcfp.hpp"

namespace {

using ojson = nlohmann::ordered_json;

std::vector<double> parse_comma_list(const std::string& text,
                                     const std::string& flag) {
  std::vector<double> out;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const std::string field = pos == std::string::npos
                                  ? text.substr(start)
                                  : text.substr(start, pos - start);
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &consumed);
    } catch (const std::exception&) {
      throw qcfp::ParseError(flag + ": not a number: '" + field + "'");
    }
    if (consumed != field.size()) {
      throw qcfp::ParseError(flag + ": trailing characters in '" + field +
                             "'");
    }
    out.push_back(v);
    if (pos == std::string::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

qcfp::SampleRegion make_region(const std::string& region_csv,
                               std::size_t dimension, std::size_t samples,
                               std::uint64_t seed) {
  const std::vector<double> vals = parse_comma_list(region_csv, "--region");
  std::vector<double> lo(dimension);
  std::vector<double> hi(dimension);
  if (vals.size() == 2) {
    for (std::size_t i = 0; i < dimension; ++i) {
      lo[i] = vals[0];
      hi[i] = vals[1];
    }
  } else if (vals.size() == 2 * dimension) {
    for (std::size_t i = 0; i < dimension; ++i) {
      lo[i] = vals[2 * i];
      hi[i] = vals[2 * i + 1];
    }
  } else {
    throw qcfp::ParseError(
        "--region expects lo,hi or per-axis lo1,hi1,...,lo" +
        std::to_string(dimension) + ",hi" + std::to_string(dimension));
  }
  return qcfp::SampleRegion(qcfp::Point(std::move(lo)),
                            qcfp::Point(std::move(hi)), samples, seed);
}

int do_run(const std::string& problem_path, double eps,
           std::size_t max_sweeps, const std::string& trace_out,
           const std::string& x0_csv) {
  const qcfp::ParsedProblem parsed = qcfp::parse_problem(problem_path);
  std::optional<qcfp::Point> x0 = parsed.x0;
  if (!x0_csv.empty()) {
    x0 = qcfp::Point(parse_comma_list(x0_csv, "--x0"));
  }
  if (!x0) {
    throw qcfp::InvalidArgument(
        "no starting point: provide \"x0\" in the problem file or --x0");
  }
  qcfp::SolverConfig cfg;
  cfg.eps = eps;
  cfg.max_sweeps = max_sweeps;
  cfg.record_inner = !trace_out.empty();
  cfg.fejer_reference = parsed.feasible_reference;
  const qcfp::SolveResult result = qcfp::solve(parsed.problem, *x0, cfg);
  ojson out;
  out["status"] = qcfp::status_name(result.status);
  out["final_point"] = result.final_point.coords();
  out["residual"] = result.final_residual;
  out["sweeps"] = result.sweeps;
  std::cout << out.dump() << "\n";
  if (!trace_out.empty()) {
    qcfp::save_trace(result.trace, parsed.problem.dimension(), trace_out);
  }
  if (result.status == qcfp::SolveStatus::OracleError) {
    std::cerr << "error: " << result.error_message << "\n";
    return 1;
  }
  return result.status == qcfp::SolveStatus::Converged ? 0 : 2;
}

ojson report_json(const std::string& function_label,
                  const qcfp::ValidationReport& rep) {
  ojson j;
  j["function"] = function_label;
  j["property"] = rep.property;
  j["samples"] = rep.samples;
  j["skipped"] = rep.skipped;
  j["violations"] = rep.violations;
  j["max_violation"] = rep.max_violation;
  j["passed"] = rep.passed;
  j["vacuous"] = rep.vacuous;
  if (!rep.note.empty()) {
    j["note"] = rep.note;
  }
  if (!rep.worst_case.empty()) {
    ojson worst = ojson::array();
    for (const qcfp::Point& p : rep.worst_case) {
      worst.push_back(p.coords());
    }
    j["worst_case"] = std::move(worst);
  }
  return j;
}

int do_validate(const std::string& problem_path, const std::string& region_csv,
                std::size_t samples, std::uint64_t seed, double tol) {
  const qcfp::ParsedProblem parsed = qcfp::parse_problem(problem_path);
  const qcfp::SampleRegion region =
      make_region(region_csv, parsed.problem.dimension(), samples, seed);
  bool any_failed = false;
  bool any_vacuous = false;
  for (const qcfp::QcOracle& f : parsed.problem.functions()) {
    const qcfp::ValidationReport reports[] = {
        qcfp::check_quasiconvex(f, region, tol),
        qcfp::check_star_inequality(f, region, tol),
        qcfp::check_sholder(f, region, tol),
        qcfp::check_konnov(f, region, tol),
        qcfp::check_cutter(f, region, tol),
    };
    for (const qcfp::ValidationReport& rep : reports) {
      std::cout << report_json(f.label(), rep).dump() << "\n";
      any_failed = any_failed || !rep.passed;
      any_vacuous = any_vacuous || rep.vacuous;
    }
  }
  if (any_failed) {
    return 1;
  }
  return any_vacuous ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cyclic star subgradient projection solver for quasi-convex "
      "feasibility problems"};
  app.require_subcommand(1);

  std::string problem_path;
  double eps = 1e-8;
  std::size_t max_sweeps = 10000;
  std::string trace_out;
  std::string x0_csv;
  CLI::App* run = app.add_subcommand("run", "solve a problem file");
  run->add_option("--problem", problem_path, "problem file (JSON)")
      ->required();
  run->add_option("--eps", eps, "residual threshold");
  run->add_option("--max-sweeps", max_sweeps, "sweep cap");
  run->add_option("--trace-out", trace_out, "write a CSV trace here");
  run->add_option("--x0", x0_csv, "starting point, comma-separated");

  std::string region_csv = "-5,5";
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  CLI::App* validate =
      app.add_subcommand("validate", "sample-check every oracle property");
  validate->add_option("--problem", problem_path, "problem file (JSON)")
      ->required();
  validate->add_option("--region", region_csv,
                       "sampling box: lo,hi or per-axis lo1,hi1,...");
  validate->add_option("--samples", samples, "samples per property");
  validate->add_option("--seed", seed, "sampling seed");
  validate->add_option("--tol", tol, "violation tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) {
      return do_run(problem_path, eps, max_sweeps, trace_out, x0_csv);
    }
    return do_validate(problem_path, region_csv, samples, seed, tol);
  } catch (const qcfp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
