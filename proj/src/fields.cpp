#include "firefront/fields.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "firefront/error.hpp"

namespace firefront {

ScalarField ScalarField::parse(const std::string& text) {
  // Plain literals stay constants so that constant fields cost nothing.
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first != std::string::npos) {
    double value = 0.0;
    const char* b = text.data() + first;
    const char* e = text.data() + last + 1;
    const auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec == std::errc() && ptr == e) return ScalarField(value);
  }
  return ScalarField(Expression::parse(text));
}

double ScalarField::eval(double t, const AerialPoint& p) const {
  if (const auto* c = std::get_if<double>(&impl_)) return *c;
  return std::get<Expression>(impl_).eval(t, p.x, p.y);
}

bool ScalarField::depends_on_time() const {
  if (const auto* e = std::get_if<Expression>(&impl_)) return e->uses_variable('t');
  return false;
}

std::string ScalarField::describe() const {
  if (const auto* c = std::get_if<double>(&impl_)) {
    std::ostringstream out;
    out << *c;
    return out.str();
  }
  return std::get<Expression>(impl_).source();
}

std::pair<double, double> wind_angle_to_surface(double gx, double gy, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double lift = std::sqrt(1.0 + (c * gx + s * gy) * (c * gx + s * gy));
  const double cos_s = (c + c * gx * gx + s * gx * gy) / (lift * std::sqrt(1.0 + gx * gx));
  const double sin_s = (s + s * gy * gy + c * gx * gy) / (lift * std::sqrt(1.0 + gy * gy));
  return {cos_s, sin_s};
}

std::pair<double, double> wind_angle_to_surface(const Terrain& terrain,
                                                const AerialPoint& p, double phi) {
  const Vec2 g = terrain.gradient(p);
  return wind_angle_to_surface(g.x, g.y, phi);
}

}  // namespace firefront
