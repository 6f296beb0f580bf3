#ifndef QCFP_FUNCTIONS_HPP
#define QCFP_FUNCTIONS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcfp/errors.hpp"
#include "qcfp/oracle.hpp"
#include "qcfp/point.hpp"

namespace qcfp {

// f(x) = <a,x> + b. Convex, so the gradient doubles as a star subgradient.
inline QcOracle make_affine(Point a, double b) {
  if (norm(a) == 0.0) {
    throw ZeroSlope("affine oracle requires a nonzero slope vector");
  }
  const std::size_t n = a.dim();
  const double modulus = norm(a);
  Point slope = a;
  return QcOracle(
      "affine", n, modulus, 1.0,
      [a = std::move(a), b](const Point& x) { return dot(a, x) + b; },
      [slope = std::move(slope)](const Point&) { return slope; });
}

// f(x) = ||x - center|| - radius. The subgradient selector normalizes the
// radial direction; f(x) > 0 guarantees x != center.
inline QcOracle make_ball(Point center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw NonPositiveRadius("ball oracle requires radius > 0");
  }
  const std::size_t n = center.dim();
  Point c2 = center;
  return QcOracle(
      "ball", n, 1.0, 1.0,
      [center = std::move(center), radius](const Point& x) {
        return distance(x, center) - radius;
      },
      [c2 = std::move(c2)](const Point& x) {
        const Point r = x - c2;
        return (1.0 / norm(r)) * r;
      });
}

// f(x) = (<a,x> + b) / (<c,x> + d) on the open halfspace <c,x> + d > 0.
// Quasi-convex there; star subgradient a - f(x) c. The family is not
// globally Hoelder, so the caller states a modulus valid on the region
// it intends to operate in (estimate_holder can supply one).
inline QcOracle make_linear_fractional(Point a, double b, Point c, double d,
                                       double holder_modulus) {
  if (a.dim() != c.dim()) {
    throw DimensionMismatch(
        "linear_fractional numerator and denominator slopes differ in "
        "dimension");
  }
  if (norm(c) == 0.0) {
    throw ZeroSlope(
        "linear_fractional oracle requires a nonzero denominator slope");
  }
  const std::size_t n = a.dim();
  Point a2 = a;
  Point c2 = c;
  Point c3 = c;
  return QcOracle(
      "linear_fractional", n, holder_modulus, 1.0,
      [a = std::move(a), b, c = std::move(c), d](const Point& x) {
        return (dot(a, x) + b) / (dot(c, x) + d);
      },
      [a2 = std::move(a2), b, c2 = std::move(c2), d](const Point& x) {
        const double value = (dot(a2, x) + b) / (dot(c2, x) + d);
        return a2 - value * c2;
      },
      [c3 = std::move(c3), d](const Point& x) { return dot(c3, x) + d > 0.0; });
}

// f(x) = sqrt(|x|) - s on the line. Hoelder with L = 1, delta = 1/2;
// sign(0) never reaches the projection because f(0) = -s < 0.
inline QcOracle make_sqrt_abs_shift(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw InvalidArgument("sqrt_abs_shift oracle requires shift > 0");
  }
  return QcOracle(
      "sqrt_abs_shift", 1, 1.0, 0.5,
      [s](const Point& x) { return std::sqrt(std::fabs(x[0])) - s; },
      [](const Point& x) {
        return Point{x[0] > 0.0 ? 1.0 : (x[0] < 0.0 ? -1.0 : 0.0)};
      });
}

// f(x) = floor(x) for x > 1, f(x) = x otherwise. Nondecreasing, upper
// semicontinuous, with closed zero sublevel set (-inf, 0]; every strict
// sublevel set is a left half-line, so the constant 1 is a star
// subgradient everywhere.
inline QcOracle make_floor_ramp() {
  return QcOracle(
      "floor_ramp", 1, 1.0, 1.0,
      [](const Point& x) { return x[0] > 1.0 ? std::floor(x[0]) : x[0]; },
      [](const Point&) { return Point{1.0}; });
}

// f = phi(g(x)) with g convex (subgradient oracle supplied) and phi
// nondecreasing. Any convex subgradient of g supports the strict sublevel
// sets of the composition, so it serves as the star subgradient. Hoelder
// data cannot be derived through phi in general and must be supplied.
inline QcOracle make_monotone_composition(std::size_t dimension, EvalFn g_eval,
                                          SubgradFn g_subgrad,
                                          std::function<double(double)> phi,
                                          double holder_modulus,
                                          double holder_order) {
  if (!g_eval || !g_subgrad || !phi) {
    throw InvalidArgument(
        "monotone_composition oracle requires non-null callables");
  }
  return QcOracle(
      "monotone_composition", dimension, holder_modulus, holder_order,
      [g_eval = std::move(g_eval), phi](const Point& x) {
        return phi(g_eval(x));
      },
      std::move(g_subgrad));
}

enum class Family {
  affine,
  ball,
  linear_fractional,
  sqrt_abs_shift,
  floor_ramp,
  monotone_composition,
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::affine: return "affine";
    case Family::ball: return "ball";
    case Family::linear_fractional: return "linear_fractional";
    case Family::sqrt_abs_shift: return "sqrt_abs_shift";
    case Family::floor_ramp: return "floor_ramp";
    case Family::monotone_composition: return "monotone_composition";
  }
  throw InvalidArgument("unrecognized family enumerator");
}

inline Family family_from_name(const std::string& name) {
  if (name == "affine") return Family::affine;
  if (name == "ball") return Family::ball;
  if (name == "linear_fractional") return Family::linear_fractional;
  if (name == "sqrt_abs_shift") return Family::sqrt_abs_shift;
  if (name == "floor_ramp") return Family::floor_ramp;
  if (name == "monotone_composition") return Family::monotone_composition;
  throw UnknownFamily("unknown function family '" + name + "'");
}

// Declarative description of one oracle: the in-memory mirror of a problem
// file entry. Field usage depends on the family; compositions are limited
// to a serializable catalog (outer: identity | cube, inner: affine | ball).
struct FamilySpec {
  Family family = Family::affine;
  std::vector<double> a;       // affine, linear_fractional, composition inner
  double b = 0.0;              // affine, linear_fractional, composition inner
  std::vector<double> c;       // linear_fractional
  double d = 0.0;              // linear_fractional
  std::vector<double> center;  // ball, composition inner
  double radius = 0.0;         // ball, composition inner
  double shift = 0.0;          // sqrt_abs_shift
  std::string outer;           // monotone_composition
  std::string inner;           // monotone_composition
  std::optional<double> holder_modulus;
  std::optional<double> holder_order;
  std::optional<std::string> label;
};

namespace detail {

inline QcOracle make_catalog_composition(const FamilySpec& spec,
                                         std::size_t dimension) {
  if (!spec.holder_modulus || !spec.holder_order) {
    throw InvalidArgument(
        "monotone_composition requires explicit holder data");
  }
  std::function<double(double)> phi;
  if (spec.outer == "identity") {
    phi = [](double t) { return t; };
  } else if (spec.outer == "cube") {
    phi = [](double t) { return t * t * t; };
  } else {
    throw InvalidArgument("unknown outer function '" + spec.outer +
                          "' (expected identity or cube)");
  }
  QcOracle inner = [&]() -> QcOracle {
    if (spec.inner == "affine") {
      return make_affine(Point(spec.a), spec.b);
    }
    if (spec.inner == "ball") {
      return make_ball(Point(spec.center), spec.radius);
    }
    throw InvalidArgument("unknown inner function '" + spec.inner +
                          "' (expected affine or ball)");
  }();
  return make_monotone_composition(dimension, inner.eval(),
                                   inner.star_subgrad(), std::move(phi),
                                   *spec.holder_modulus, *spec.holder_order);
}

}  // namespace detail

// Builds the oracle a FamilySpec describes. Optional holder data overrides
// the family default; linear_fractional and monotone_composition require it.
inline QcOracle make_oracle(const FamilySpec& spec, std::size_t dimension) {
  QcOracle oracle = [&]() -> QcOracle {
    switch (spec.family) {
      case Family::affine:
        return make_affine(Point(spec.a), spec.b);
      case Family::ball:
        return make_ball(Point(spec.center), spec.radius);
      case Family::linear_fractional:
        if (!spec.holder_modulus) {
          throw InvalidArgument(
              "linear_fractional requires an explicit holder modulus");
        }
        return make_linear_fractional(Point(spec.a), spec.b, Point(spec.c),
                                      spec.d, *spec.holder_modulus);
      case Family::sqrt_abs_shift:
        return make_sqrt_abs_shift(spec.shift);
      case Family::floor_ramp:
        return make_floor_ramp();
      case Family::monotone_composition:
        return detail::make_catalog_composition(spec, dimension);
    }
    throw InvalidArgument("unrecognized family enumerator");
  }();
  if (oracle.dimension() != dimension) {
    throw DimensionMismatch("family '" + family_name(spec.family) +
                            "' builds a dimension-" +
                            std::to_string(oracle.dimension()) +
                            " oracle, problem expects " +
                            std::to_string(dimension));
  }
  if (spec.holder_modulus || spec.holder_order) {
    oracle = oracle.with_holder(
        spec.holder_modulus.value_or(oracle.holder_modulus()),
        spec.holder_order.value_or(oracle.holder_order()));
  }
  if (spec.label) {
    oracle = oracle.with_label(*spec.label);
  }
  return oracle;
}

}  // namespace qcfp

#endif  // QCFP_FUNCTIONS_HPP
