#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "firefront/expression.hpp"
#include "firefront/terrain.hpp"
#include "firefront/vec.hpp"

namespace firefront {

/// A scalar function of (t, x, y): either a constant or a parsed expression.
class ScalarField {
 public:
  ScalarField(double value = 0.0) : impl_(value) {}  // NOLINT(implicit)
  ScalarField(Expression expr) : impl_(std::move(expr)) {}  // NOLINT(implicit)

  /// Number literal or expression source, e.g. "0.25" or "1+x^2/2".
  static ScalarField parse(const std::string& text);

  double eval(double t, const AerialPoint& p) const;
  bool is_constant() const { return std::holds_alternative<double>(impl_); }
  bool depends_on_time() const;
  std::string describe() const;

 private:
  std::variant<double, Expression> impl_;
};

/// Whether the wind angle field is measured in the aerial chart or already
/// on the tangent plane of the surface.
enum class AngleFrame { Aerial, Surface };

/// Fuel, flame and wind fields that parametrise the fire metric.
struct EnvironmentFields {
  ScalarField a{1.0};
  ScalarField h{1.0};
  /// Coefficient of the slope term; falls back to h when absent.
  std::optional<ScalarField> h_prime;
  ScalarField eps{0.0};
  ScalarField wind_angle{0.0};
  AngleFrame wind_frame = AngleFrame::Surface;

  const ScalarField& slope_coefficient() const { return h_prime ? *h_prime : h; }
};

/// cos and sin of the surface wind angle for an aerial angle phi, using the
/// two separately normalised quotient formulas of the model verbatim.
/// Reduces to (cos phi, sin phi) where the gradient vanishes.
std::pair<double, double> wind_angle_to_surface(const Terrain& terrain,
                                                const AerialPoint& p, double phi);
std::pair<double, double> wind_angle_to_surface(double gx, double gy, double phi);

}  // namespace firefront
