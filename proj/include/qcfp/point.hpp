#ifndef QCFP_POINT_HPP
#define QCFP_POINT_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qcfp/errors.hpp"

namespace qcfp {

// A point of Euclidean n-space. The coordinate vector is fixed at
// construction, nonempty, and always finite.
class Point {
 public:
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
      throw InvalidArgument("Point requires at least one coordinate");
    }
    for (double c : coords_) {
      if (!std::isfinite(c)) {
        throw InvalidArgument("Point coordinates must be finite");
      }
    }
  }

  Point(std::initializer_list<double> coords)
      : Point(std::vector<double>(coords)) {}

  static Point zeros(std::size_t dim) {
    return Point(std::vector<double>(dim, 0.0));
  }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

 private:
  std::vector<double> coords_;
};

inline void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("points have dimensions " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

inline Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<double> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
  return Point(std::move(c));
}

inline Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<double> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
  return Point(std::move(c));
}

inline Point operator*(double s, const Point& p) {
  std::vector<double> c(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) c[i] = s * p[i];
  return Point(std::move(c));
}

inline double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

// Euclidean 2-norm.
inline double norm(const Point& p) { return std::sqrt(dot(p, p)); }

inline double distance(const Point& a, const Point& b) { return norm(a - b); }

}  // namespace qcfp

#endif  // QCFP_POINT_HPP
