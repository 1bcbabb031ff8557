#include "firefront/geodesic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "firefront/error.hpp"

namespace firefront {

namespace {

constexpr int kRootScan = 720;

bool fields_depend_on_time(const EnvironmentFields& f) {
  return f.a.depends_on_time() || f.h.depends_on_time() ||
         f.slope_coefficient().depends_on_time() || f.eps.depends_on_time() ||
         f.wind_angle.depends_on_time();
}

}  // namespace

GeodesicSolver::GeodesicSolver(FireMetric metric, GeodesicOptions options)
    : metric_(std::move(metric)),
      options_(options),
      fd_step_(options.fd_step > 0.0 ? options.fd_step
                                     : 1e-5 * metric_.terrain().domain().scale()),
      time_dependent_(fields_depend_on_time(metric_.fields())) {}

Matrix3 GeodesicSolver::spatial_block(double t, const AerialPoint& p, const Vec2& v) const {
  const Tensor2 gf = metric_.at(t, p).fundamental_tensor_exact(v);
  Matrix3 g{};
  g[0][0] = 1.0;
  g[1][1] = -gf.g11;
  g[1][2] = g[2][1] = -gf.g12;
  g[2][2] = -gf.g22;
  return g;
}

SpacetimeTensor GeodesicSolver::spacetime_tensor(double t, const AerialPoint& p,
                                                 const Vec2& v) const {
  SpacetimeTensor s;
  s.g = spatial_block(t, p, v);
  // Spatial block is -g^F; invert it in closed form.
  const double a = -s.g[1][1];
  const double b = -s.g[1][2];
  const double d = -s.g[2][2];
  const double det = a * d - b * b;
  if (!(a > 0.0) || !(det > 0.0)) {
    std::ostringstream msg;
    msg << "fundamental tensor not positive definite at t=" << t << ", (" << p.x << ", "
        << p.y << ") in direction (" << v.x << ", " << v.y << ")";
    throw Error(ErrorKind::SingularTensor, msg.str());
  }
  s.g_inv[0][0] = 1.0;
  s.g_inv[1][1] = -d / det;
  s.g_inv[1][2] = s.g_inv[2][1] = b / det;
  s.g_inv[2][2] = -a / det;
  return s;
}

ChristoffelSample GeodesicSolver::christoffel(double t, const AerialPoint& p,
                                              const Vec2& v) const {
  const SpacetimeTensor center = spacetime_tensor(t, p, v);
  const double h = fd_step_;
  // dg[r][i][j] = d g_ij / d x^r with x^0 = t, x^1 = x, x^2 = y.
  std::array<Matrix3, 3> dg{};
  auto diff = [&](Matrix3& out, const Matrix3& plus, const Matrix3& minus) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i][j] = (plus[i][j] - minus[i][j]) / (2.0 * h);
  };
  if (time_dependent_) {
    diff(dg[0], spatial_block(t + h, p, v), spatial_block(t - h, p, v));
  }
  diff(dg[1], spatial_block(t, {p.x + h, p.y}, v), spatial_block(t, {p.x - h, p.y}, v));
  diff(dg[2], spatial_block(t, {p.x, p.y + h}, v), spatial_block(t, {p.x, p.y - h}, v));

  ChristoffelSample out;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        double sum = 0.0;
        for (int r = 0; r < 3; ++r) {
          sum += center.g_inv[k][r] * (dg[i][r][j] + dg[j][r][i] - dg[r][i][j]);
        }
        out.gamma[k][i][j] = out.gamma[k][j][i] = 0.5 * sum;
      }
    }
  }
  return out;
}

Vec2 GeodesicSolver::rhs(const GeodesicState& s) const {
  const ChristoffelSample c = christoffel(s.t, s.position(), s.velocity());
  const std::array<double, 3> u{1.0, s.vx, s.vy};
  auto contract = [&](const Matrix3& g) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sum += g[i][j] * u[i] * u[j];
    return sum;
  };
  const double time_term = contract(c.gamma[0]);
  return {-contract(c.gamma[1]) + time_term * u[1], -contract(c.gamma[2]) + time_term * u[2]};
}

GeodesicState GeodesicSolver::rk4_step(const GeodesicState& s, double dt) const {
  struct Deriv {
    double dx, dy, dvx, dvy;
  };
  auto eval = [&](const GeodesicState& st) {
    const Vec2 acc = rhs(st);
    return Deriv{st.vx, st.vy, acc.x, acc.y};
  };
  auto advance = [&](const Deriv& k, double h) {
    return GeodesicState{s.t + h, s.x + h * k.dx, s.y + h * k.dy, s.vx + h * k.dvx,
                         s.vy + h * k.dvy};
  };
  const Deriv k1 = eval(s);
  const Deriv k2 = eval(advance(k1, 0.5 * dt));
  const Deriv k3 = eval(advance(k2, 0.5 * dt));
  const Deriv k4 = eval(advance(k3, dt));
  GeodesicState next;
  next.t = s.t + dt;
  next.x = s.x + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  next.y = s.y + dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
  next.vx = s.vx + dt / 6.0 * (k1.dvx + 2.0 * k2.dvx + 2.0 * k3.dvx + k4.dvx);
  next.vy = s.vy + dt / 6.0 * (k1.dvy + 2.0 * k2.dvy + 2.0 * k3.dvy + k4.dvy);
  if (options_.renormalize) {
    const double f = metric_.metric_value(next.t, next.position(), next.velocity());
    next.vx /= f;
    next.vy /= f;
  }
  return next;
}

double GeodesicSolver::lightlike_defect(const GeodesicState& s) const {
  return std::fabs(metric_.metric_value(s.t, s.position(), s.velocity()) - 1.0);
}

Vec2 GeodesicSolver::initial_velocity(double t, const AerialPoint& p, const Vec2& w) const {
  const double wn = norm(w);
  if (!(wn > 0.0)) {
    throw Error(ErrorKind::DegenerateCurve, "front tangent is the zero vector");
  }
  const Vec2 dir = w / wn;
  const LocalMetric m = metric_.at(t, p);
  auto residual = [&](double theta) { return m.g_product(m.indicatrix_point(theta), dir); };

  std::vector<double> roots;
  std::array<double, kRootScan + 1> f{};
  for (int k = 0; k <= kRootScan; ++k) {
    f[k] = k == kRootScan ? f[0] : residual(2.0 * std::numbers::pi * k / kRootScan);
  }
  for (int k = 0; k < kRootScan; ++k) {
    double lo = 2.0 * std::numbers::pi * k / kRootScan;
    double hi = 2.0 * std::numbers::pi * (k + 1) / kRootScan;
    double flo = f[k];
    if (flo == 0.0) {
      roots.push_back(lo);
      continue;
    }
    if (flo * f[k + 1] > 0.0 || f[k + 1] == 0.0) continue;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      mid = 0.5 * (lo + hi);
      const double fm = residual(mid);
      if (std::fabs(fm) <= 1e-10 * std::fabs(m.g_product(m.indicatrix_point(mid), m.indicatrix_point(mid))) ||
          hi - lo < 1e-15) {
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(mid);
  }
  if (roots.empty()) {
    throw Error(ErrorKind::NoRoot, "no F-orthogonal direction found; metric not convex here?");
  }
  if (roots.size() > 2) {
    throw Error(ErrorKind::AmbiguousRoot,
                std::to_string(roots.size()) +
                    " F-orthogonal directions found; indicatrix is not strongly convex");
  }
  for (double theta : roots) {
    const Vec2 v = m.indicatrix_point(theta);
    if (cross(v, dir) > 0.0) return v;
  }
  throw Error(ErrorKind::NoRoot, "no outward-pointing F-orthogonal direction");
}

std::vector<Vec2> GeodesicSolver::ignition_fan(double t, const AerialPoint& p, int n) const {
  if (n < 8) throw Error(ErrorKind::Config, "ignition fan needs at least 8 trajectories");
  const LocalMetric m = metric_.at(t, p);
  std::vector<Vec2> fan;
  fan.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) fan.push_back(m.indicatrix_point(2.0 * std::numbers::pi * k / n));
  return fan;
}

}  // namespace firefront
