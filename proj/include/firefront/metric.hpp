#pragma once

#include <array>
#include <vector>

#include "firefront/fields.hpp"
#include "firefront/jet.hpp"
#include "firefront/terrain.hpp"
#include "firefront/vec.hpp"

namespace firefront {

/// Symmetric 2x2 matrix (g11, g12, g22).
struct Tensor2 {
  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;

  double operator()(const Vec2& u, const Vec2& w) const {
    return g11 * u.x * w.x + g12 * (u.x * w.y + u.y * w.x) + g22 * u.y * w.y;
  }
  Vec2 apply(const Vec2& u) const { return {g11 * u.x + g12 * u.y, g12 * u.x + g22 * u.y}; }
  double trace() const { return g11 + g22; }
  double det() const { return g11 * g22 - g12 * g12; }
  /// Eigenvalues in ascending order.
  std::array<double, 2> eigenvalues() const;
};

/// Everything the metric needs at one (t, p), gathered once. Field range
/// checks happen when it is built.
struct LocalCoefficients {
  double gx = 0.0, gy = 0.0;    ///< terrain gradient
  double nx = 1.0, ny = 1.0;    ///< sqrt(1 + gx^2), sqrt(1 + gy^2)
  double a = 1.0;               ///< elliptical (wind) amplitude
  double h = 1.0;               ///< flame term
  double h_prime = 1.0;         ///< slope term coefficient
  double eps = 0.0;             ///< eccentricity
  double cos_wind = 1.0;        ///< cos of the surface wind angle
  double sin_wind = 0.0;        ///< sin of the surface wind angle
};

/// The fire metric frozen at one (t, p).
///
/// With A = a(1 - eps^2):
///
///     beta  = v1 gx + v2 gy
///     alpha = sqrt(v1^2 + v2^2 + beta^2)
///     omega = (v1 + gx beta)/nx cos(wind) + (v2 + gy beta)/ny sin(wind)
///     F     = alpha^2 / (alpha^2 A/(alpha - eps omega) + h alpha + h' beta)
///
/// so that F(v) = 1 exactly when the surface length of v equals the fire
/// speed in the heading of v.
class LocalMetric {
 public:
  explicit LocalMetric(const LocalCoefficients& c) : c_(c) {}

  const LocalCoefficients& coefficients() const { return c_; }

  double beta(const Vec2& v) const { return v.x * c_.gx + v.y * c_.gy; }
  double alpha(const Vec2& v) const;
  double omega(const Vec2& v) const;
  /// Euclidean R^3 inner product of the lifted vectors.
  double lifted_dot(const Vec2& u, const Vec2& w) const;

  /// Speed along the surface for aerial heading theta.
  double fire_speed(double theta) const;
  /// Throws ZeroVector for v = 0.
  double value(const Vec2& v) const;
  /// F^2 at v, with no zero check (F^2(0) = 0).
  double value_squared(const Vec2& v) const;
  /// Vanishes exactly on the indicatrix; negative inside it.
  double indicatrix_residual(const Vec2& v) const;
  /// The F-unit vector with heading theta.
  Vec2 indicatrix_point(double theta) const;

  /// Closed-form g_v(v, u) = (1/2) d/ds F(v + s u)^2 at s = 0.
  double g_product(const Vec2& v, const Vec2& u) const;
  /// Half the Hessian of F^2 by central differences, relative step
  /// `rel_step` * |v|; the mixed term uses a four-point cross stencil.
  Tensor2 fundamental_tensor(const Vec2& v, double rel_step = 1e-4) const;
  /// Half the Hessian of F^2 by second-order forward differentiation.
  Tensor2 fundamental_tensor_exact(const Vec2& v) const;

  template <class T>
  T evaluate(const T& v1, const T& v2) const;

 private:
  LocalCoefficients c_;
};

struct SlopeConvexity {
  bool pass = false;
  double margin = 0.0;  ///< (a + h')/h' - 2 sin(slant)
};

struct ConvexityScan {
  bool pass = true;
  double min_eigenvalue = 0.0;
  double worst_theta = 0.0;
  /// Headings where the fundamental tensor failed to be positive definite.
  std::vector<double> failing_thetas;
};

/// Terrain plus fields: the time-dependent Finsler metric on the aerial
/// chart. Cheap to copy; immutable.
class FireMetric {
 public:
  FireMetric(Terrain terrain, EnvironmentFields fields)
      : terrain_(std::move(terrain)), fields_(std::move(fields)) {}

  const Terrain& terrain() const { return terrain_; }
  const EnvironmentFields& fields() const { return fields_; }

  /// Evaluates every field at (t, p) and checks a, h, h' > 0 and
  /// 0 <= eps < 1 (FieldRangeError otherwise).
  LocalCoefficients coefficients(double t, const AerialPoint& p) const;
  LocalMetric at(double t, const AerialPoint& p) const { return LocalMetric(coefficients(t, p)); }

  double beta(const AerialPoint& p, const Vec2& v) const;
  double alpha(const AerialPoint& p, const Vec2& v) const;
  double omega(double t, const AerialPoint& p, const Vec2& v) const;
  double fire_speed(double t, const AerialPoint& p, double theta) const;
  double metric_value(double t, const AerialPoint& p, const Vec2& v) const;
  Vec2 indicatrix_point(double t, const AerialPoint& p, double theta) const;
  double indicatrix_residual(double t, const AerialPoint& p, const Vec2& v) const;
  Tensor2 fundamental_tensor(double t, const AerialPoint& p, const Vec2& v) const;
  double analytic_g_product(double t, const AerialPoint& p, const Vec2& v, const Vec2& u) const;

  /// Closed-form condition 2 sin(slant) < (a + h')/h', valid without wind.
  /// Throws NotApplicable if eps(t, p) != 0.
  SlopeConvexity convexity_check_slope(double t, const AerialPoint& p) const;
  /// Samples n_dirs headings and checks positive definiteness of the
  /// fundamental tensor against a floor of 1e-9 * trace.
  ConvexityScan convexity_scan_numeric(double t, const AerialPoint& p, int n_dirs) const;

 private:
  Terrain terrain_;
  EnvironmentFields fields_;
};

template <class T>
T LocalMetric::evaluate(const T& v1, const T& v2) const {
  using std::sqrt;
  const T beta = c_.gx * v1 + c_.gy * v2;
  const T alpha = sqrt(v1 * v1 + v2 * v2 + beta * beta);
  const T omega = (v1 + c_.gx * beta) * (c_.cos_wind / c_.nx) +
                  (v2 + c_.gy * beta) * (c_.sin_wind / c_.ny);
  const double A = c_.a * (1.0 - c_.eps * c_.eps);
  const T alpha2 = alpha * alpha;
  const T denom = alpha2 * A / (alpha - c_.eps * omega) + c_.h * alpha + c_.h_prime * beta;
  return alpha2 / denom;
}

}  // namespace firefront
