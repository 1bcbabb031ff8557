#include <doctest.h>

#include <numbers>

#include "firefront/error.hpp"
#include "firefront/fields.hpp"
#include "support.hpp"

using namespace firefront;
using std::numbers::pi;

TEST_CASE("scalar field evaluation") {
  CHECK(ScalarField(0.25).eval(7, {1, 2}) == 0.25);
  CHECK(ScalarField::parse("0.25").is_constant());
  const ScalarField f = ScalarField::parse("2*t");
  CHECK_FALSE(f.is_constant());
  CHECK(f.depends_on_time());
  CHECK(f.eval(1.5, {0, 0}) == 3.0);
  CHECK_FALSE(ScalarField::parse("1+x^2/2").depends_on_time());
  CHECK(ScalarField::parse("1+x^2/2").eval(0, {2, 0}) == 3.0);
  CHECK_THROWS_AS(ScalarField::parse("x/0").eval(0, {1, 1}), Error);
  CHECK_THROWS_AS(ScalarField::parse("1+"), ParseError);
}

TEST_CASE("h' falls back to h") {
  EnvironmentFields f;
  f.h = 0.7;
  CHECK(f.slope_coefficient().eval(0, {0, 0}) == 0.7);
  f.h_prime = ScalarField(0.2);
  CHECK(f.slope_coefficient().eval(0, {0, 0}) == 0.2);
}

TEST_CASE("wind angle conversion examples") {
  const auto [c0, s0] = wind_angle_to_surface(testing::flat(), {1, 1}, pi / 6);
  CHECK(c0 == doctest::Approx(std::cos(pi / 6)));
  CHECK(s0 == doctest::Approx(std::sin(pi / 6)));

  const auto [c1, s1] = wind_angle_to_surface(Terrain::plane(std::sqrt(3.0), 0, testing::square(10)), {0, 0}, pi / 2);
  CHECK(c1 == doctest::Approx(0.0).scale(1.0));
  CHECK(s1 == doctest::Approx(1.0));

  // Direct substitution: cos = (cos phi + gx d)/(n_x m), sin = (sin phi + gy d)/(n_y m) with
  // d = gx cos phi + gy sin phi and m = sqrt(1 + d^2).
  const double gx = 0.4, phi = pi / 6;
  const double d = gx * std::cos(phi);
  const double m = std::sqrt(1 + d * d);
  const auto [c2, s2] = wind_angle_to_surface(gx, 0.0, phi);
  CHECK(c2 == doctest::Approx((std::cos(phi) + gx * d) / (std::sqrt(1 + gx * gx) * m)));
  CHECK(s2 == doctest::Approx(std::sin(phi) / m));
  CHECK(std::fabs(c2 * c2 + s2 * s2 - 1) <= 1e-3);
}

TEST_CASE("wind angle conversion is the identity on flat ground") {
  for (int k = 0; k < 16; ++k) {
    const double phi = -pi + 2 * pi * k / 16;
    const auto [c, s] = wind_angle_to_surface(0.0, 0.0, phi);
    CHECK(c == doctest::Approx(std::cos(phi)).scale(1.0));
    CHECK(s == doctest::Approx(std::sin(phi)).scale(1.0));
  }
}

TEST_CASE("wind conversion is not normalised on steep skew slopes") {
  const auto [c, s] = wind_angle_to_surface(2.0, 1.5, pi / 3);
  CHECK(std::fabs(c * c + s * s - 1) > 1e-3);
}
