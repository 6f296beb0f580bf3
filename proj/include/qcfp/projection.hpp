#ifndef QCFP_PROJECTION_HPP
#define QCFP_PROJECTION_HPP

#include <cmath>
#include <cstddef>
#include <string>

#include "qcfp/errors.hpp"
#include "qcfp/oracle.hpp"
#include "qcfp/point.hpp"

namespace qcfp {

inline double positive_part(double v) { return v > 0.0 ? v : 0.0; }

// Evaluates f(x) with dimension and domain checks. The value is required
// to be finite.
inline double evaluate(const QcOracle& f, const Point& x) {
  if (x.dim() != f.dimension()) {
    throw DimensionMismatch("oracle '" + f.label() + "' expects dimension " +
                            std::to_string(f.dimension()) + ", point has " +
                            std::to_string(x.dim()));
  }
  if (!f.in_domain(x)) {
    throw DomainViolation("oracle '" + f.label() +
                          "' evaluated outside its domain");
  }
  const double v = f.eval()(x);
  if (!std::isfinite(v)) {
    throw DomainViolation("oracle '" + f.label() +
                          "' produced a non-finite value");
  }
  return v;
}

// Fetches the selected star subgradient at x. Meaningful only where
// f(x) > 0; the selector contract guarantees a nonzero vector there.
inline Point star_subgradient(const QcOracle& f, const Point& x) {
  if (x.dim() != f.dimension()) {
    throw DimensionMismatch("oracle '" + f.label() + "' expects dimension " +
                            std::to_string(f.dimension()) + ", point has " +
                            std::to_string(x.dim()));
  }
  if (!f.in_domain(x)) {
    throw DomainViolation("oracle '" + f.label() +
                          "' queried for a subgradient outside its domain");
  }
  Point g = f.star_subgrad()(x);
  if (g.dim() != f.dimension()) {
    throw DimensionMismatch("oracle '" + f.label() +
                            "' returned a subgradient of wrong dimension");
  }
  if (norm(g) == 0.0) {
    throw ZeroSubgradient("oracle '" + f.label() +
                          "' returned the zero vector");
  }
  return g;
}

namespace detail {

// The infeasible branch of the projection: x already evaluated, value > 0.
// Step length is (f_+(x)/L)^(1/delta) along the normalized negative
// subgradient direction.
inline Point projection_step(const QcOracle& f, const Point& x, double value) {
  const Point g = star_subgradient(f, x);
  const double step =
      std::pow(value / f.holder_modulus(), 1.0 / f.holder_order());
  if (!std::isfinite(step)) {
    throw NonFiniteStep("projection step for oracle '" + f.label() +
                        "' is not finite (value " + std::to_string(value) +
                        ")");
  }
  return x - (step / norm(g)) * g;
}

}  // namespace detail

// Star subgradient projection relative to f. Feasible points (f(x) <= 0,
// tested exactly) are returned unchanged; infeasible points move by
// (f_+(x)/L)^(1/delta) along -c/||c|| for the selected subgradient c.
inline Point project(const QcOracle& f, const Point& x) {
  const double v = evaluate(f, x);
  if (v <= 0.0) {
    return x;
  }
  return detail::projection_step(f, x, v);
}

// Feasibility gauge: max_i (f_i)_+(x). Zero exactly on the solution set.
inline double residual(const FeasibilityProblem& p, const Point& x) {
  double worst = 0.0;
  for (const QcOracle& f : p.functions()) {
    const double v = positive_part(evaluate(f, x));
    if (v > worst) worst = v;
  }
  return worst;
}

// True iff x moves by at most tol under the projection. At tol = 0 this
// agrees with f(x) <= 0: the fixed point set of the projection is the
// zero sublevel set.
inline bool is_fixed_point(const QcOracle& f, const Point& x, double tol) {
  if (tol < 0.0) {
    throw InvalidArgument("is_fixed_point requires tol >= 0");
  }
  return distance(project(f, x), x) <= tol;
}

}  // namespace qcfp

#endif  // QCFP_PROJECTION_HPP
