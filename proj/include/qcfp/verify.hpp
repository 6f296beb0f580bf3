#ifndef QCFP_VERIFY_HPP
#define QCFP_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qcfp/errors.hpp"
#include "qcfp/oracle.hpp"
#include "qcfp/point.hpp"
#include "qcfp/projection.hpp"

namespace qcfp {

// Axis-aligned sampling box with a deterministic draw budget.
class SampleRegion {
 public:
  SampleRegion(Point lower, Point upper, std::size_t sample_count,
               std::uint64_t seed)
      : lower_(std::move(lower)),
        upper_(std::move(upper)),
        sample_count_(sample_count),
        seed_(seed) {
    require_same_dim(lower_, upper_);
    for (std::size_t i = 0; i < lower_.dim(); ++i) {
      if (!(lower_[i] <= upper_[i])) {
        throw InvalidArgument("sample region requires lower <= upper on axis " +
                              std::to_string(i));
      }
    }
    if (sample_count_ < 1) {
      throw InvalidArgument("sample region requires sample_count >= 1");
    }
  }

  const Point& lower() const { return lower_; }
  const Point& upper() const { return upper_; }
  std::size_t dim() const { return lower_.dim(); }
  std::size_t sample_count() const { return sample_count_; }
  std::uint64_t seed() const { return seed_; }

  SampleRegion with_sample_count(std::size_t count) const {
    return SampleRegion(lower_, upper_, count, seed_);
  }

 private:
  Point lower_;
  Point upper_;
  std::size_t sample_count_;
  std::uint64_t seed_;
};

// Outcome of one sampled property check. passed holds exactly when no
// violation was found; vacuous flags a run that tested nothing (empty
// feasible pool, all samples skipped), which a pass must not hide.
struct ValidationReport {
  std::string property;
  std::size_t samples = 0;     // comparisons actually tested
  std::size_t violations = 0;
  double max_violation = 0.0;
  std::vector<Point> worst_case;  // inputs of the worst violation
  std::size_t skipped = 0;        // domain-guard skips
  bool passed = false;
  bool vacuous = false;
  std::string note;
};

namespace detail {

inline std::mt19937_64 make_engine(const SampleRegion& region) {
  return std::mt19937_64(region.seed());
}

inline Point draw_point(std::mt19937_64& rng, const SampleRegion& region) {
  std::vector<double> c(region.dim());
  for (std::size_t i = 0; i < region.dim(); ++i) {
    std::uniform_real_distribution<double> axis(region.lower()[i],
                                                region.upper()[i]);
    c[i] = axis(rng);
  }
  return Point(std::move(c));
}

inline void require_region_dim(const QcOracle& f, const SampleRegion& region) {
  if (f.dimension() != region.dim()) {
    throw DimensionMismatch("oracle '" + f.label() + "' has dimension " +
                            std::to_string(f.dimension()) +
                            ", sample region has " +
                            std::to_string(region.dim()));
  }
}

struct FeasiblePool {
  std::vector<Point> points;
  std::vector<double> values;
};

// Rejection-samples points with f <= 0. The attempt budget is 100x the
// requested pool size so an infeasible region terminates with an empty
// pool instead of looping forever.
inline FeasiblePool draw_feasible_pool(const QcOracle& f,
                                       std::mt19937_64& rng,
                                       const SampleRegion& region) {
  FeasiblePool pool;
  const std::size_t budget = 100 * region.sample_count();
  for (std::size_t attempt = 0;
       attempt < budget && pool.points.size() < region.sample_count();
       ++attempt) {
    Point q = draw_point(rng, region);
    try {
      const double v = evaluate(f, q);
      if (v <= 0.0) {
        pool.points.push_back(std::move(q));
        pool.values.push_back(v);
      }
    } catch (const DomainViolation&) {
    }
  }
  return pool;
}

inline void record_violation(ValidationReport& rep, double magnitude,
                             std::vector<Point> inputs) {
  ++rep.violations;
  if (rep.violations == 1 || magnitude > rep.max_violation) {
    rep.max_violation = magnitude;
    rep.worst_case = std::move(inputs);
  }
}

inline void finalize_report(ValidationReport& rep) {
  rep.passed = rep.violations == 0;
  if (rep.samples == 0) {
    rep.vacuous = true;
    if (rep.note.empty()) {
      rep.note = "no comparisons executed";
    }
  }
}

inline void require_tol(double tol) {
  if (tol < 0.0 || !std::isfinite(tol)) {
    throw InvalidArgument("validators require finite tol >= 0");
  }
}

}  // namespace detail

// Samples (x, y, lambda) and tests the pointwise quasi-convexity form
// f(lambda x + (1-lambda) y) <= max(f(x), f(y)). Domain-guard failures
// are skips, not violations.
inline ValidationReport check_quasiconvex(const QcOracle& f,
                                          const SampleRegion& region,
                                          double tol) {
  detail::require_region_dim(f, region);
  detail::require_tol(tol);
  ValidationReport rep;
  rep.property = "quasiconvex";
  auto rng = detail::make_engine(region);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t j = 0; j < region.sample_count(); ++j) {
    const Point x = detail::draw_point(rng, region);
    const Point y = detail::draw_point(rng, region);
    const double lambda = unit(rng);
    const Point mid = lambda * x + (1.0 - lambda) * y;
    try {
      const double fx = evaluate(f, x);
      const double fy = evaluate(f, y);
      const double fmid = evaluate(f, mid);
      ++rep.samples;
      const double gap = fmid - std::max(fx, fy);
      if (gap > tol) {
        detail::record_violation(rep, gap, {x, y, mid});
      }
    } catch (const DomainViolation&) {
      ++rep.skipped;
    }
  }
  detail::finalize_report(rep);
  return rep;
}

// For sampled x with f(x) > 0 and sampled y with f(y) < f(x), the selected
// star subgradient g must satisfy <g, y - x> <= 0. A zero subgradient at
// an infeasible x is itself a violation.
inline ValidationReport check_star_inequality(const QcOracle& f,
                                              const SampleRegion& region,
                                              double tol) {
  detail::require_region_dim(f, region);
  detail::require_tol(tol);
  ValidationReport rep;
  rep.property = "star_inequality";
  auto rng = detail::make_engine(region);
  for (std::size_t j = 0; j < region.sample_count(); ++j) {
    const Point x = detail::draw_point(rng, region);
    const Point y = detail::draw_point(rng, region);
    double fx;
    double fy;
    try {
      fx = evaluate(f, x);
      fy = evaluate(f, y);
    } catch (const DomainViolation&) {
      ++rep.skipped;
      continue;
    }
    if (!(fx > 0.0) || !(fy < fx)) {
      continue;
    }
    std::optional<Point> g;
    try {
      g = star_subgradient(f, x);
    } catch (const ZeroSubgradient&) {
      ++rep.samples;
      detail::record_violation(rep, positive_part(fx), {x});
      continue;
    }
    ++rep.samples;
    const double s = dot(*g, y - x);
    if (s > tol) {
      detail::record_violation(rep, s, {x, y});
    }
  }
  detail::finalize_report(rep);
  return rep;
}

// Tests |f(x) - f(q)| <= L ||x - q||^delta for feasible q, with the
// oracle's own Hoelder data. Vacuous when rejection finds no feasible q.
inline ValidationReport check_sholder(const QcOracle& f,
                                      const SampleRegion& region, double tol) {
  detail::require_region_dim(f, region);
  detail::require_tol(tol);
  ValidationReport rep;
  rep.property = "sholder";
  auto rng = detail::make_engine(region);
  const detail::FeasiblePool pool = detail::draw_feasible_pool(f, rng, region);
  if (pool.points.empty()) {
    rep.note = "no feasible samples found";
    detail::finalize_report(rep);
    return rep;
  }
  const double L = f.holder_modulus();
  const double delta = f.holder_order();
  for (std::size_t j = 0; j < region.sample_count(); ++j) {
    const Point x = detail::draw_point(rng, region);
    const Point& q = pool.points[j % pool.points.size()];
    const double fq = pool.values[j % pool.values.size()];
    try {
      const double fx = evaluate(f, x);
      ++rep.samples;
      const double gap =
          std::fabs(fx - fq) - L * std::pow(distance(x, q), delta);
      if (gap > tol) {
        detail::record_violation(rep, gap, {x, q});
      }
    } catch (const DomainViolation&) {
      ++rep.skipped;
    }
  }
  detail::finalize_report(rep);
  return rep;
}

// Tests the infeasibility bound f_+(x) <= L <c/||c||, x - q>^delta with
// c the selected star subgradient and q feasible. A nonpositive inner
// product is a hard violation: the bound's base must be positive.
inline ValidationReport check_konnov(const QcOracle& f,
                                     const SampleRegion& region, double tol) {
  detail::require_region_dim(f, region);
  detail::require_tol(tol);
  ValidationReport rep;
  rep.property = "konnov";
  auto rng = detail::make_engine(region);
  const detail::FeasiblePool pool = detail::draw_feasible_pool(f, rng, region);
  if (pool.points.empty()) {
    rep.note = "no feasible samples found";
    detail::finalize_report(rep);
    return rep;
  }
  const double L = f.holder_modulus();
  const double delta = f.holder_order();
  for (std::size_t j = 0; j < region.sample_count(); ++j) {
    const Point x = detail::draw_point(rng, region);
    const Point& q = pool.points[j % pool.points.size()];
    double fx;
    try {
      fx = evaluate(f, x);
    } catch (const DomainViolation&) {
      ++rep.skipped;
      continue;
    }
    if (!(fx > 0.0)) {
      continue;
    }
    std::optional<Point> c;
    try {
      c = star_subgradient(f, x);
    } catch (const ZeroSubgradient&) {
      ++rep.samples;
      detail::record_violation(rep, fx, {x, q});
      continue;
    }
    ++rep.samples;
    const double base = dot((1.0 / norm(*c)) * (*c), x - q);
    const double bound = base > 0.0 ? L * std::pow(base, delta) : 0.0;
    const double gap = fx - bound;
    if (base <= 0.0 || gap > tol) {
      detail::record_violation(rep, gap, {x, q});
    }
  }
  detail::finalize_report(rep);
  return rep;
}

// Tests the cutter inequality <P_f x - x, P_f x - y> <= 0 against feasible
// y; equality is expected (and allowed) at feasible x.
inline ValidationReport check_cutter(const QcOracle& f,
                                     const SampleRegion& region, double tol) {
  detail::require_region_dim(f, region);
  detail::require_tol(tol);
  ValidationReport rep;
  rep.property = "cutter";
  auto rng = detail::make_engine(region);
  const detail::FeasiblePool pool = detail::draw_feasible_pool(f, rng, region);
  if (pool.points.empty()) {
    rep.note = "no feasible samples found";
    detail::finalize_report(rep);
    return rep;
  }
  for (std::size_t j = 0; j < region.sample_count(); ++j) {
    const Point x = detail::draw_point(rng, region);
    const Point& y = pool.points[j % pool.points.size()];
    try {
      const Point px = project(f, x);
      ++rep.samples;
      const double s = dot(px - x, px - y);
      if (s > tol) {
        detail::record_violation(rep, s, {x, y});
      }
    } catch (const DomainViolation&) {
      ++rep.skipped;
    }
  }
  detail::finalize_report(rep);
  return rep;
}

// Distance from x to the sampled zero sublevel set within the region: the
// minimum of ||x - q|| over feasible draws. An upper bound of the true
// distance that is non-increasing as sample_count grows (draws form a
// prefix-stable stream).
inline double dist_to_sublevel(const QcOracle& f, const Point& x,
                               const SampleRegion& region) {
  detail::require_region_dim(f, region);
  require_same_dim(x, region.lower());
  auto rng = detail::make_engine(region);
  bool found = false;
  double best = 0.0;
  for (std::size_t j = 0; j < region.sample_count(); ++j) {
    const Point q = detail::draw_point(rng, region);
    try {
      if (evaluate(f, q) <= 0.0) {
        const double d = distance(x, q);
        if (!found || d < best) {
          found = true;
          best = d;
        }
      }
    } catch (const DomainViolation&) {
    }
  }
  if (!found) {
    throw NoFeasibleSamples("no feasible samples for oracle '" + f.label() +
                            "' in the given region");
  }
  return best;
}

// Verifies fixed-point closedness on a caller-built convergent sequence:
// the last element stands in for the limit and must be feasible within
// tol, with its sampled distance to the zero sublevel set at most
// dist_bound (sampling resolution makes a small positive bound necessary).
inline ValidationReport check_fixed_point_closed(const QcOracle& f,
                                                 const std::vector<Point>& seq,
                                                 const SampleRegion& region,
                                                 double dist_bound,
                                                 double tol) {
  detail::require_region_dim(f, region);
  detail::require_tol(tol);
  if (dist_bound < 0.0) {
    throw InvalidArgument("check_fixed_point_closed requires dist_bound >= 0");
  }
  if (seq.empty()) {
    throw InvalidArgument(
        "check_fixed_point_closed requires a nonempty sequence");
  }
  if (seq.size() >= 2) {
    const double last_gap = distance(seq[seq.size() - 2], seq.back());
    if (last_gap > tol) {
      throw NonConvergentInput(
          "sequence gaps have not shrunk below tol (last gap " +
          std::to_string(last_gap) + ")");
    }
  }
  ValidationReport rep;
  rep.property = "fixed_point_closed";
  const Point& limit = seq.back();
  const double value = evaluate(f, limit);
  ++rep.samples;
  if (value > tol) {
    detail::record_violation(rep, value, {limit});
  }
  const double d = dist_to_sublevel(f, limit, region);
  ++rep.samples;
  if (d > dist_bound) {
    detail::record_violation(rep, d - dist_bound, {limit});
  }
  rep.note = "limit value " + std::to_string(value) +
             ", sampled sublevel distance " + std::to_string(d);
  detail::finalize_report(rep);
  return rep;
}

struct HolderEstimate {
  double modulus;
  double order;
  bool degenerate;  // all sampled quotients were zero
};

// Empirical Hoelder data: for each candidate order, the maximum of
// |f(x) - f(q)| / ||x - q||^delta over sampled pairs with feasible q;
// returns the order minimizing that maximum, with the maximum inflated
// by a 1.1 safety factor. Evidence, not proof.
inline HolderEstimate estimate_holder(const QcOracle& f,
                                      const SampleRegion& region,
                                      const std::vector<double>& delta_grid) {
  detail::require_region_dim(f, region);
  if (delta_grid.empty()) {
    throw InvalidArgument("estimate_holder requires a nonempty delta grid");
  }
  for (double d : delta_grid) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw InvalidArgument("estimate_holder requires positive finite deltas");
    }
  }
  auto rng = detail::make_engine(region);
  const detail::FeasiblePool pool = detail::draw_feasible_pool(f, rng, region);
  if (pool.points.empty()) {
    throw NoFeasibleSamples("no feasible samples for oracle '" + f.label() +
                            "' in the given region");
  }
  // One x draw pairs with several pooled q so near-extremal directions
  // are well represented.
  const std::size_t pairs_per_x = std::min<std::size_t>(pool.points.size(), 16);
  std::vector<double> value_gaps;
  std::vector<double> distances;
  std::size_t cursor = 0;
  for (std::size_t j = 0; j < region.sample_count(); ++j) {
    const Point x = detail::draw_point(rng, region);
    double fx;
    try {
      fx = evaluate(f, x);
    } catch (const DomainViolation&) {
      continue;
    }
    for (std::size_t t = 0; t < pairs_per_x; ++t) {
      cursor = (cursor + 1) % pool.points.size();
      const double dist = distance(x, pool.points[cursor]);
      if (dist == 0.0) {
        continue;
      }
      value_gaps.push_back(std::fabs(fx - pool.values[cursor]));
      distances.push_back(dist);
    }
  }
  if (value_gaps.empty()) {
    throw NoFeasibleSamples("no usable sample pairs for oracle '" + f.label() +
                            "'");
  }
  double best_max = 0.0;
  double best_delta = delta_grid.front();
  bool first = true;
  for (double delta : delta_grid) {
    double worst = 0.0;
    for (std::size_t i = 0; i < value_gaps.size(); ++i) {
      const double quotient = value_gaps[i] / std::pow(distances[i], delta);
      if (quotient > worst) {
        worst = quotient;
      }
    }
    if (first || worst < best_max) {
      first = false;
      best_max = worst;
      best_delta = delta;
    }
  }
  return HolderEstimate{1.1 * best_max, best_delta, best_max == 0.0};
}

}  // namespace qcfp

#endif  // QCFP_VERIFY_HPP
