#ifndef QCFP_SOLVER_HPP
#define QCFP_SOLVER_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcfp/errors.hpp"
#include "qcfp/oracle.hpp"
#include "qcfp/point.hpp"
#include "qcfp/projection.hpp"

namespace qcfp {

struct SolverConfig {
  double eps = 1e-8;                     // residual threshold, >= 0
  std::size_t max_sweeps = 10000;        // >= 1
  bool record_inner = true;              // keep every inner point per sweep
  std::optional<Point> fejer_reference;  // known feasible point to monitor
};

// One full cyclic pass. inner holds y^0..y^m and values holds
// f_{i+1}(y^i) for i = 0..m-1 when inner recording is on; entry and exit
// duplicate y^0 and y^m so stripped records stay self-contained.
struct SweepRecord {
  std::size_t sweep_index;  // 1-based position in the run
  Point entry;              // y^0 = x_k
  Point exit;               // y^m = x_{k+1}
  std::vector<Point> inner;
  std::vector<double> values;
  double residual;  // residual at exit
  std::optional<double> dist_to_reference;
};

enum class SolveStatus { Converged, MaxSweepsReached, OracleError };

inline std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxSweepsReached: return "max_sweeps_reached";
    case SolveStatus::OracleError: return "oracle_error";
  }
  throw InvalidArgument("unrecognized status enumerator");
}

struct SolveResult {
  SolveStatus status;
  Point final_point;
  double final_residual;
  std::size_t sweeps;
  std::vector<SweepRecord> trace;
  std::string error_message;  // nonempty iff status is OracleError
};

namespace detail {

template <typename E>
[[noreturn]] void rethrow_tagged(const E& e, std::size_t index) {
  throw E("function " + std::to_string(index) + ": " + e.what());
}

// Applies P_{f_index} inside a sweep, tagging oracle failures with the
// 1-based function index.
inline Point sweep_step(const QcOracle& f, const Point& y, double value,
                        std::size_t index) {
  if (value <= 0.0) {
    return y;
  }
  try {
    return projection_step(f, y, value);
  } catch (const DomainViolation& e) {
    rethrow_tagged(e, index);
  } catch (const ZeroSubgradient& e) {
    rethrow_tagged(e, index);
  } catch (const NonFiniteStep& e) {
    rethrow_tagged(e, index);
  } catch (const DimensionMismatch& e) {
    rethrow_tagged(e, index);
  }
}

inline double sweep_eval(const QcOracle& f, const Point& y,
                         std::size_t index) {
  try {
    return evaluate(f, y);
  } catch (const DomainViolation& e) {
    rethrow_tagged(e, index);
  } catch (const DimensionMismatch& e) {
    rethrow_tagged(e, index);
  }
}

}  // namespace detail

// One cyclic pass y^i = P_{f_i}(y^{i-1}), i = 1..m. Each step evaluates
// once and reuses the value for the projection, so the chain agrees
// bitwise with repeated project calls.
inline SweepRecord sweep(const FeasibilityProblem& p, const Point& x) {
  if (x.dim() != p.dimension()) {
    throw DimensionMismatch("sweep entry point has dimension " +
                            std::to_string(x.dim()) + ", problem expects " +
                            std::to_string(p.dimension()));
  }
  std::vector<Point> inner;
  std::vector<double> values;
  inner.reserve(p.size() + 1);
  values.reserve(p.size());
  inner.push_back(x);
  Point y = x;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const QcOracle& f = p.function(i);
    const double v = detail::sweep_eval(f, y, i + 1);
    values.push_back(v);
    y = detail::sweep_step(f, y, v, i + 1);
    inner.push_back(y);
  }
  const double res = residual(p, y);
  return SweepRecord{1,           x,   std::move(y), std::move(inner),
                     std::move(values), res, std::nullopt};
}

// The cyclic operator T = P_{f_m} ... P_{f_1}; sweep(p, x).exit == T(x)
// bitwise.
inline std::function<Point(const Point&)> compose_operator(
    const FeasibilityProblem& p) {
  return [p](const Point& x) {
    Point y = x;
    for (const QcOracle& f : p.functions()) {
      y = project(f, y);
    }
    return y;
  };
}

// Runs cyclic sweeps from x0 until residual <= eps or the sweep cap.
// A feasible x0 converges in zero sweeps. Oracle failures surface as
// status OracleError with the partial trace preserved.
inline SolveResult solve(const FeasibilityProblem& p, const Point& x0,
                         const SolverConfig& cfg) {
  if (!(cfg.eps >= 0.0) || !std::isfinite(cfg.eps)) {
    throw InvalidArgument("solver requires finite eps >= 0");
  }
  if (cfg.max_sweeps < 1) {
    throw InvalidArgument("solver requires max_sweeps >= 1");
  }
  if (cfg.fejer_reference && cfg.fejer_reference->dim() != p.dimension()) {
    throw DimensionMismatch("fejer reference has dimension " +
                            std::to_string(cfg.fejer_reference->dim()) +
                            ", problem expects " +
                            std::to_string(p.dimension()));
  }
  Point x = x0;
  std::vector<SweepRecord> trace;
  double res;
  try {
    res = residual(p, x);
  } catch (const Error& e) {
    return SolveResult{SolveStatus::OracleError, x,
                       std::numeric_limits<double>::quiet_NaN(), 0,
                       std::move(trace), e.what()};
  }
  if (res <= cfg.eps) {
    return SolveResult{SolveStatus::Converged, std::move(x), res, 0,
                       std::move(trace), ""};
  }
  for (std::size_t k = 1; k <= cfg.max_sweeps; ++k) {
    try {
      SweepRecord rec = sweep(p, x);
      rec.sweep_index = k;
      if (cfg.fejer_reference) {
        rec.dist_to_reference = distance(rec.exit, *cfg.fejer_reference);
      }
      if (!cfg.record_inner) {
        rec.inner.clear();
        rec.values.clear();
      }
      x = rec.exit;
      res = rec.residual;
      trace.push_back(std::move(rec));
    } catch (const Error& e) {
      return SolveResult{SolveStatus::OracleError, std::move(x), res, k - 1,
                         std::move(trace), e.what()};
    }
    if (res <= cfg.eps) {
      return SolveResult{SolveStatus::Converged, std::move(x), res, k,
                         std::move(trace), ""};
    }
  }
  return SolveResult{SolveStatus::MaxSweepsReached, std::move(x), res,
                     cfg.max_sweeps, std::move(trace), ""};
}

// True iff the exit point of every sweep is no farther from z than its
// entry point, within tol. z must be feasible for the guarantee to mean
// anything; feasibility is the caller's assertion.
inline bool fejer_check(const std::vector<SweepRecord>& trace, const Point& z,
                        double tol) {
  if (trace.empty()) {
    throw EmptyTrace("fejer_check requires a nonempty trace");
  }
  if (tol < 0.0) {
    throw InvalidArgument("fejer_check requires tol >= 0");
  }
  for (const SweepRecord& rec : trace) {
    if (distance(rec.exit, z) > distance(rec.entry, z) + tol) {
      return false;
    }
  }
  return true;
}

}  // namespace qcfp

#endif  // QCFP_SOLVER_HPP
