#ifndef QCFP_ORACLE_HPP
#define QCFP_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qcfp/errors.hpp"
#include "qcfp/point.hpp"

namespace qcfp {

using EvalFn = std::function<double(const Point&)>;
using SubgradFn = std::function<Point(const Point&)>;
using GuardFn = std::function<bool(const Point&)>;

// A quasi-convex function bundle: evaluation, a deterministic selector
// returning one nonzero star subgradient at infeasible points, and the
// Hoelder data (modulus L, order delta) valid on the zero sublevel set.
//
// Both callables must be pure and deterministic; equal inputs must give
// equal outputs. The subgradient selector is only ever consulted where
// eval(x) > 0, and may return anything (or throw) elsewhere. An optional
// domain guard restricts the oracle to the open set where it is defined.
class QcOracle {
 public:
  QcOracle(std::string label, std::size_t dimension, double holder_modulus,
           double holder_order, EvalFn eval, SubgradFn star_subgrad,
           GuardFn domain_guard = nullptr)
      : label_(std::move(label)),
        dimension_(dimension),
        holder_modulus_(holder_modulus),
        holder_order_(holder_order),
        eval_(std::move(eval)),
        star_subgrad_(std::move(star_subgrad)),
        domain_guard_(std::move(domain_guard)) {
    if (dimension_ == 0) {
      throw InvalidArgument("oracle dimension must be >= 1");
    }
    if (!(holder_modulus_ > 0.0) || !std::isfinite(holder_modulus_)) {
      throw InvalidArgument("Hoelder modulus L must be finite and > 0");
    }
    if (!(holder_order_ > 0.0) || !std::isfinite(holder_order_)) {
      throw InvalidArgument("Hoelder order delta must be finite and > 0");
    }
    if (!eval_ || !star_subgrad_) {
      throw InvalidArgument("oracle requires eval and star_subgrad callables");
    }
  }

  const std::string& label() const { return label_; }
  std::size_t dimension() const { return dimension_; }
  double holder_modulus() const { return holder_modulus_; }
  double holder_order() const { return holder_order_; }
  const EvalFn& eval() const { return eval_; }
  const SubgradFn& star_subgrad() const { return star_subgrad_; }
  const GuardFn& domain_guard() const { return domain_guard_; }

  // True when x lies in the oracle's valid open set.
  bool in_domain(const Point& x) const {
    return !domain_guard_ || domain_guard_(x);
  }

  // Same oracle with replaced Hoelder data.
  QcOracle with_holder(double modulus, double order) const {
    return QcOracle(label_, dimension_, modulus, order, eval_, star_subgrad_,
                    domain_guard_);
  }

  // Same oracle under a different label.
  QcOracle with_label(std::string label) const {
    return QcOracle(std::move(label), dimension_, holder_modulus_,
                    holder_order_, eval_, star_subgrad_, domain_guard_);
  }

 private:
  std::string label_;
  std::size_t dimension_;
  double holder_modulus_;
  double holder_order_;
  EvalFn eval_;
  SubgradFn star_subgrad_;
  GuardFn domain_guard_;
};

// An ordered list of m >= 1 oracles over one shared dimension. Feasible
// points are those in the intersection of all zero sublevel sets.
class FeasibilityProblem {
 public:
  FeasibilityProblem(std::size_t dimension, std::vector<QcOracle> functions)
      : dimension_(dimension), functions_(std::move(functions)) {
    if (dimension_ == 0) {
      throw InvalidArgument("problem dimension must be >= 1");
    }
    if (functions_.empty()) {
      throw InvalidArgument("problem requires at least one function");
    }
    for (const QcOracle& f : functions_) {
      if (f.dimension() != dimension_) {
        throw DimensionMismatch("oracle '" + f.label() + "' has dimension " +
                                std::to_string(f.dimension()) +
                                ", problem has dimension " +
                                std::to_string(dimension_));
      }
    }
  }

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return functions_.size(); }
  const std::vector<QcOracle>& functions() const { return functions_; }
  const QcOracle& function(std::size_t i) const { return functions_[i]; }

 private:
  std::size_t dimension_;
  std::vector<QcOracle> functions_;
};

}  // namespace qcfp

#endif  // QCFP_ORACLE_HPP
