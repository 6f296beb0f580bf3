#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "qcfp/qcfp.hpp"

using qcfp::Point;

TEST_CASE("point construction validates its coordinates", "[point]") {
  REQUIRE_THROWS_AS(Point(std::vector<double>{}), qcfp::InvalidArgument);
  REQUIRE_THROWS_AS(Point{std::numeric_limits<double>::quiet_NaN()},
                    qcfp::InvalidArgument);
  REQUIRE_THROWS_AS((Point{1.0, std::numeric_limits<double>::infinity()}),
                    qcfp::InvalidArgument);
  const Point p{1.5, -2.0};
  REQUIRE(p.dim() == 2);
  REQUIRE(p[0] == 1.5);
  REQUIRE(p[1] == -2.0);
}

TEST_CASE("zeros builds the origin", "[point]") {
  const Point z = Point::zeros(3);
  REQUIRE(z.dim() == 3);
  REQUIRE(z == Point{0.0, 0.0, 0.0});
  REQUIRE_THROWS_AS(Point::zeros(0), qcfp::InvalidArgument);
}

TEST_CASE("vector arithmetic", "[point]") {
  const Point a{1.0, 2.0};
  const Point b{3.0, -1.0};
  REQUIRE(a + b == Point{4.0, 1.0});
  REQUIRE(a - b == Point{-2.0, 3.0});
  REQUIRE(2.0 * a == Point{2.0, 4.0});
  REQUIRE(qcfp::dot(a, b) == 1.0);
  REQUIRE(qcfp::norm(Point{3.0, 4.0}) == 5.0);
  REQUIRE(qcfp::distance(Point{1.0, 1.0}, Point{4.0, 5.0}) == 5.0);
}

TEST_CASE("dimension mismatches are rejected", "[point]") {
  const Point a{1.0, 2.0};
  const Point b{1.0, 2.0, 3.0};
  REQUIRE_THROWS_AS(a + b, qcfp::DimensionMismatch);
  REQUIRE_THROWS_AS(a - b, qcfp::DimensionMismatch);
  REQUIRE_THROWS_AS(qcfp::dot(a, b), qcfp::DimensionMismatch);
  REQUIRE_THROWS_AS(qcfp::distance(a, b), qcfp::DimensionMismatch);
}

TEST_CASE("equality is exact on coordinates", "[point]") {
  REQUIRE(Point{0.5, 0.25} == Point{0.5, 0.25});
  REQUIRE(Point{0.5} != Point{0.5, 0.5});
  REQUIRE(Point{0.5, 0.25} != Point{0.5, 0.2500000001});
}
