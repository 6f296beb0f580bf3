#ifndef QCFP_TESTS_SUPPORT_HPP
#define QCFP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "qcfp/qcfp.hpp"

namespace testsupport {

struct FamilyCase {
  qcfp::QcOracle oracle;
  qcfp::SampleRegion region;
};

// Independent box sampler so tests do not share draw logic with the
// library's own validators.
struct BoxSampler {
  std::mt19937_64 rng;
  const qcfp::SampleRegion& region;

  BoxSampler(const qcfp::SampleRegion& r, std::uint64_t seed)
      : rng(seed), region(r) {}

  qcfp::Point draw() {
    std::vector<double> c(region.dim());
    for (std::size_t i = 0; i < region.dim(); ++i) {
      std::uniform_real_distribution<double> axis(region.lower()[i],
                                                  region.upper()[i]);
      c[i] = axis(rng);
    }
    return qcfp::Point(std::move(c));
  }

  std::vector<qcfp::Point> draw_feasible(const qcfp::QcOracle& f,
                                         std::size_t want) {
    std::vector<qcfp::Point> out;
    for (std::size_t attempt = 0; attempt < 200 * want && out.size() < want;
         ++attempt) {
      qcfp::Point q = draw();
      try {
        if (qcfp::evaluate(f, q) <= 0.0) {
          out.push_back(std::move(q));
        }
      } catch (const qcfp::DomainViolation&) {
      }
    }
    return out;
  }
};

inline qcfp::SampleRegion box1(double lo, double hi, std::size_t samples,
                               std::uint64_t seed) {
  return qcfp::SampleRegion(qcfp::Point{lo}, qcfp::Point{hi}, samples, seed);
}

inline qcfp::SampleRegion box2(double lo, double hi, std::size_t samples,
                               std::uint64_t seed) {
  return qcfp::SampleRegion(qcfp::Point{lo, lo}, qcfp::Point{hi, hi}, samples,
                            seed);
}

inline qcfp::QcOracle cube_of_first_coordinate() {
  const qcfp::QcOracle inner = qcfp::make_affine(qcfp::Point{1.0, 0.0}, 0.0);
  return qcfp::make_monotone_composition(
      2, inner.eval(), inner.star_subgrad(),
      [](double t) { return t * t * t; }, 12.0, 1.0);
}

// Every built-in family on the box its Hoelder data is valid for.
inline std::vector<FamilyCase> builtin_cases(std::size_t samples,
                                             std::uint64_t seed) {
  std::vector<FamilyCase> cases;
  cases.push_back({qcfp::make_affine(qcfp::Point{1.0, 0.0}, -2.0),
                   box2(-5.0, 5.0, samples, seed)});
  cases.push_back({qcfp::make_ball(qcfp::Point{0.0, 0.0}, 1.0),
                   box2(-3.0, 3.0, samples, seed)});
  cases.push_back(
      {qcfp::make_linear_fractional(qcfp::Point{1.0, 0.0}, -2.0,
                                    qcfp::Point{0.0, 1.0}, 1.0, 8.0),
       qcfp::SampleRegion(qcfp::Point{-5.0, 0.0}, qcfp::Point{5.0, 5.0},
                          samples, seed)});
  cases.push_back(
      {qcfp::make_sqrt_abs_shift(1.0), box1(-10.0, 10.0, samples, seed)});
  cases.push_back({qcfp::make_floor_ramp(), box1(-4.0, 6.0, samples, seed)});
  cases.push_back({cube_of_first_coordinate(), box2(-2.0, 2.0, samples, seed)});
  return cases;
}

inline qcfp::FeasibilityProblem two_halfspace_problem() {
  return qcfp::FeasibilityProblem(
      2, {qcfp::make_affine(qcfp::Point{1.0, 0.0}, 0.0),
          qcfp::make_affine(qcfp::Point{0.0, 1.0}, 0.0)});
}

inline qcfp::FeasibilityProblem ball_affine_problem() {
  return qcfp::FeasibilityProblem(
      2, {qcfp::make_ball(qcfp::Point{0.0, 0.0}, 1.0),
          qcfp::make_affine(qcfp::Point{1.0, 0.0}, 0.0)});
}

#ifdef QCFP_CLI_PATH
struct CommandResult {
  int exit_code;
  std::string output;
};

// Runs the CLI with the given arguments, capturing stdout; stderr is
// dropped so expected-failure cases stay quiet in test logs.
inline CommandResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(QCFP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return CommandResult{-1, ""};
  }
  std::string output;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    output.append(buf, got);
  }
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CommandResult{exit_code, output};
}

inline std::string sample_problem(const std::string& name) {
  return std::string(QCFP_SAMPLES_DIR) + "/" + name;
}
#endif

}  // namespace testsupport

#endif  // QCFP_TESTS_SUPPORT_HPP
