// Builds a two-constraint feasibility problem in code, runs the cyclic
// solver with a Fejér reference, and prints the per-sweep trajectory.
#include <cstdio>

#include "qcfp/qcfp.hpp"

int main() {
  const qcfp::FeasibilityProblem problem(
      2, {qcfp::make_ball(qcfp::Point{0.0, 0.0}, 1.0),
          qcfp::make_affine(qcfp::Point{1.0, 0.0}, 0.0)});

  qcfp::SolverConfig cfg;
  cfg.eps = 1e-10;
  cfg.max_sweeps = 100;
  cfg.fejer_reference = qcfp::Point{-0.5, 0.0};

  const qcfp::SolveResult result =
      qcfp::solve(problem, qcfp::Point{3.0, 4.0}, cfg);

  std::printf("status: %s after %zu sweeps\n",
              qcfp::status_name(result.status).c_str(), result.sweeps);
  std::printf("final point: (%.12g, %.12g), residual %.3g\n",
              result.final_point[0], result.final_point[1],
              result.final_residual);
  for (const qcfp::SweepRecord& rec : result.trace) {
    std::printf("  sweep %zu: residual %.3e, dist to reference %.6f\n",
                rec.sweep_index, rec.residual,
                rec.dist_to_reference.value_or(-1.0));
  }

  const qcfp::SampleRegion region(qcfp::Point{-3.0, -3.0},
                                  qcfp::Point{3.0, 3.0}, 2000, 7);
  const qcfp::ValidationReport report =
      qcfp::check_cutter(problem.function(0), region, 1e-9);
  std::printf("cutter check: %zu samples, %zu violations -> %s\n",
              report.samples, report.violations,
              report.passed ? "passed" : "FAILED");
  return result.status == qcfp::SolveStatus::Converged ? 0 : 1;
}
