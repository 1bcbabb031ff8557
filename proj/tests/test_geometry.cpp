#include <doctest.h>

#include <vector>

#include "firefront/geometry.hpp"

using namespace firefront;
using namespace firefront::geometry;

TEST_CASE("orientation") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
  // Below the snap grid the points are collinear.
  CHECK(orientation({0, 0}, {1, 0}, {2, 1e-13}) == 0);
  CHECK(orientation({0, 0}, {1, 0}, {2, 1e-11}) == 1);
}

TEST_CASE("proper intersections") {
  const auto hit = proper_intersection({0, 0}, {2, 2}, {0, 2}, {2, 0});
  REQUIRE(hit);
  CHECK(hit->s == doctest::Approx(0.5));
  CHECK(hit->u == doctest::Approx(0.5));
  CHECK(hit->point.x == doctest::Approx(1.0));
  CHECK(hit->point.y == doctest::Approx(1.0));
  const auto skew = proper_intersection({0, 0}, {4, 0}, {1, -1}, {1, 3});
  REQUIRE(skew);
  CHECK(skew->s == doctest::Approx(0.25));
  CHECK(skew->u == doctest::Approx(0.25));
}

TEST_CASE("touching and collinear segments do not cross") {
  CHECK_FALSE(proper_intersection({0, 0}, {1, 0}, {1, 0}, {2, 1}));
  CHECK_FALSE(proper_intersection({0, 0}, {2, 0}, {1, 0}, {1, 1}));
  CHECK_FALSE(proper_intersection({0, 0}, {2, 0}, {1, 0}, {3, 0}));
  CHECK_FALSE(proper_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  CHECK_FALSE(proper_intersection({0, 0}, {1, 1}, {2, 2}, {3, 0}));
}

TEST_CASE("area and perimeter") {
  const std::vector<Vec2> square = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  CHECK(signed_area(square) == 4.0);
  CHECK(signed_area({{0, 0}, {0, 2}, {2, 2}, {2, 0}}) == -4.0);
  CHECK(perimeter(square, true) == 8.0);
  CHECK(perimeter(square, false) == 6.0);
  CHECK(signed_area({{0, 0}, {1, 1}}) == 0.0);
}

TEST_CASE("winding numbers") {
  const std::vector<Vec2> square = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  CHECK(winding_number(square, {1, 1}) == 1);
  CHECK(winding_number(square, {3, 1}) == 0);
  CHECK(winding_number(square, {2, 1}) == 0);
  CHECK(winding_number(square, {0, 0}) == 0);
  CHECK(inside_nonzero(square, {0.5, 1.9}));
  const std::vector<Vec2> clockwise = {{0, 0}, {0, 2}, {2, 2}, {2, 0}};
  CHECK(winding_number(clockwise, {1, 1}) == -1);
  CHECK(inside_nonzero(clockwise, {1, 1}));
  // A doubly wound square.
  const std::vector<Vec2> twice = {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}, {2, 0}, {2, 2}, {0, 2}};
  CHECK(winding_number(twice, {1, 1}) == 2);
}

TEST_CASE("distance to a segment") {
  CHECK(distance_to_segment({1, 1}, {0, 0}, {2, 0}) == 1.0);
  CHECK(distance_to_segment({3, 0}, {0, 0}, {2, 0}) == 1.0);
  CHECK(distance_to_segment({-3, 4}, {0, 0}, {2, 0}) == 5.0);
  CHECK(distance_to_segment({1, 1}, {1, 1}, {1, 1}) == 0.0);
}
