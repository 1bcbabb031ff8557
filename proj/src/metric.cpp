#include "firefront/metric.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "firefront/error.hpp"

namespace firefront {

namespace {

[[noreturn]] void zero_vector() {
  throw Error(ErrorKind::ZeroVector, "metric evaluated at the zero vector");
}

[[noreturn]] void range_error(const char* name, double value, double t, const AerialPoint& p,
                              const char* requirement) {
  std::ostringstream msg;
  msg << "field '" << name << "' = " << value << " at t=" << t << ", (x,y)=(" << p.x << ", "
      << p.y << ") violates " << requirement;
  throw Error(ErrorKind::FieldRange, msg.str());
}

}  // namespace

std::array<double, 2> Tensor2::eigenvalues() const {
  const double m = 0.5 * (g11 + g22);
  const double d = std::hypot(0.5 * (g11 - g22), g12);
  return {m - d, m + d};
}

// ---------------------------------------------------------------------------
// LocalMetric

double LocalMetric::alpha(const Vec2& v) const {
  const double b = beta(v);
  return std::sqrt(v.x * v.x + v.y * v.y + b * b);
}

double LocalMetric::omega(const Vec2& v) const {
  const double b = beta(v);
  return (v.x + c_.gx * b) / c_.nx * c_.cos_wind + (v.y + c_.gy * b) / c_.ny * c_.sin_wind;
}

double LocalMetric::lifted_dot(const Vec2& u, const Vec2& w) const {
  return u.x * w.x + u.y * w.y + beta(u) * beta(w);
}

double LocalMetric::fire_speed(double theta) const {
  const Vec2 u = unit_dir(theta);
  const double al = alpha(u);
  const double A = c_.a * (1.0 - c_.eps * c_.eps);
  // omega/alpha is cos of the angle between the lifted heading and the wind
  // on the surface; beta/alpha is cos of the slope angle.
  return A / (1.0 - c_.eps * omega(u) / al) + c_.h + c_.h_prime * beta(u) / al;
}

double LocalMetric::value(const Vec2& v) const {
  if (v.x == 0.0 && v.y == 0.0) zero_vector();
  const double f = evaluate(v.x, v.y);
  if (!(f > 0.0) || !std::isfinite(f)) {
    throw Error(ErrorKind::Numerical, "fire metric is not positive at a nonzero vector");
  }
  return f;
}

double LocalMetric::value_squared(const Vec2& v) const {
  if (v.x == 0.0 && v.y == 0.0) return 0.0;
  const double f = evaluate(v.x, v.y);
  return f * f;
}

double LocalMetric::indicatrix_residual(const Vec2& v) const {
  if (v.x == 0.0 && v.y == 0.0) zero_vector();
  const double al = alpha(v);
  const double A = c_.a * (1.0 - c_.eps * c_.eps);
  return al * al * (1.0 - A / (al - c_.eps * omega(v))) - (c_.h * al + c_.h_prime * beta(v));
}

Vec2 LocalMetric::indicatrix_point(double theta) const {
  const Vec2 u = unit_dir(theta);
  return u / value(u);
}

double LocalMetric::g_product(const Vec2& v, const Vec2& u) const {
  if (v.x == 0.0 && v.y == 0.0) zero_vector();
  const double al = alpha(v);
  const double al2 = al * al;
  const double om_v = omega(v);
  const double om_u = omega(u);
  const double P = lifted_dot(v, u);
  const double A = c_.a * (1.0 - c_.eps * c_.eps);
  const double lag = al - c_.eps * om_v;
  const double D = al2 * A / lag + c_.h * al + c_.h_prime * beta(v);
  const double bracket = 2.0 * P * D +
                         A / (lag * lag) *
                             (c_.eps * al2 * (2.0 * P * om_v - al2 * om_u) - al2 * al * P) -
                         al2 * (c_.h * P / al + c_.h_prime * beta(u));
  return al2 / (D * D * D) * bracket;
}

Tensor2 LocalMetric::fundamental_tensor(const Vec2& v, double rel_step) const {
  if (v.x == 0.0 && v.y == 0.0) zero_vector();
  const double h = rel_step * norm(v);
  auto f = [&](double dx, double dy) { return value_squared({v.x + dx, v.y + dy}); };
  const double f0 = f(0.0, 0.0);
  Tensor2 g;
  g.g11 = 0.5 * (f(h, 0.0) - 2.0 * f0 + f(-h, 0.0)) / (h * h);
  g.g22 = 0.5 * (f(0.0, h) - 2.0 * f0 + f(0.0, -h)) / (h * h);
  g.g12 = 0.5 * (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4.0 * h * h);
  return g;
}

Tensor2 LocalMetric::fundamental_tensor_exact(const Vec2& v) const {
  if (v.x == 0.0 && v.y == 0.0) zero_vector();
  const Jet2 f = evaluate(Jet2::variable(v.x, 0), Jet2::variable(v.y, 1));
  const Jet2 f2 = f * f;
  return {0.5 * f2.h11, 0.5 * f2.h12, 0.5 * f2.h22};
}

// ---------------------------------------------------------------------------
// FireMetric

LocalCoefficients FireMetric::coefficients(double t, const AerialPoint& p) const {
  const SurfaceSample s = terrain_.sample(p);
  LocalCoefficients c;
  c.gx = s.gx;
  c.gy = s.gy;
  c.nx = std::sqrt(1.0 + s.gx * s.gx);
  c.ny = std::sqrt(1.0 + s.gy * s.gy);
  c.a = fields_.a.eval(t, p);
  c.h = fields_.h.eval(t, p);
  c.h_prime = fields_.slope_coefficient().eval(t, p);
  c.eps = fields_.eps.eval(t, p);
  if (!(c.a > 0.0)) range_error("a", c.a, t, p, "a > 0");
  if (!(c.h > 0.0)) range_error("h", c.h, t, p, "h > 0");
  if (!(c.h_prime > 0.0)) range_error("h_prime", c.h_prime, t, p, "h' > 0");
  if (!(c.eps >= 0.0 && c.eps < 1.0)) range_error("eps", c.eps, t, p, "0 <= eps < 1");
  const double phi = fields_.wind_angle.eval(t, p);
  if (fields_.wind_frame == AngleFrame::Surface) {
    c.cos_wind = std::cos(phi);
    c.sin_wind = std::sin(phi);
  } else {
    const auto [cs, sn] = wind_angle_to_surface(s.gx, s.gy, phi);
    c.cos_wind = cs;
    c.sin_wind = sn;
  }
  return c;
}

double FireMetric::beta(const AerialPoint& p, const Vec2& v) const {
  const Vec2 g = terrain_.gradient(p);
  return v.x * g.x + v.y * g.y;
}

double FireMetric::alpha(const AerialPoint& p, const Vec2& v) const {
  const double b = beta(p, v);
  return std::sqrt(v.x * v.x + v.y * v.y + b * b);
}

double FireMetric::omega(double t, const AerialPoint& p, const Vec2& v) const {
  return at(t, p).omega(v);
}

double FireMetric::fire_speed(double t, const AerialPoint& p, double theta) const {
  return at(t, p).fire_speed(theta);
}

double FireMetric::metric_value(double t, const AerialPoint& p, const Vec2& v) const {
  return at(t, p).value(v);
}

Vec2 FireMetric::indicatrix_point(double t, const AerialPoint& p, double theta) const {
  return at(t, p).indicatrix_point(theta);
}

double FireMetric::indicatrix_residual(double t, const AerialPoint& p, const Vec2& v) const {
  return at(t, p).indicatrix_residual(v);
}

Tensor2 FireMetric::fundamental_tensor(double t, const AerialPoint& p, const Vec2& v) const {
  return at(t, p).fundamental_tensor(v);
}

double FireMetric::analytic_g_product(double t, const AerialPoint& p, const Vec2& v,
                                      const Vec2& u) const {
  return at(t, p).g_product(v, u);
}

SlopeConvexity FireMetric::convexity_check_slope(double t, const AerialPoint& p) const {
  const LocalCoefficients c = coefficients(t, p);
  if (c.eps != 0.0) {
    throw Error(ErrorKind::NotApplicable,
                "closed-form convexity condition only holds without wind (eps = 0)");
  }
  const double sin_slant = std::sin(terrain_.slant_angle(p));
  SlopeConvexity r;
  r.margin = (c.a + c.h_prime) / c.h_prime - 2.0 * sin_slant;
  r.pass = r.margin > 0.0;
  return r;
}

ConvexityScan FireMetric::convexity_scan_numeric(double t, const AerialPoint& p,
                                                 int n_dirs) const {
  const LocalMetric m = at(t, p);
  ConvexityScan scan;
  scan.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n_dirs; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_dirs;
    const Tensor2 g = m.fundamental_tensor_exact(m.indicatrix_point(theta));
    const double lo = g.eigenvalues()[0];
    if (lo < scan.min_eigenvalue) {
      scan.min_eigenvalue = lo;
      scan.worst_theta = theta;
    }
    if (lo <= 1e-9 * std::fabs(g.trace())) {
      scan.pass = false;
      scan.failing_thetas.push_back(theta);
    }
  }
  return scan;
}

}  // namespace firefront
