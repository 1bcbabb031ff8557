#include "firefront/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "firefront/error.hpp"
#include "firefront/geometry.hpp"

namespace firefront {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(v.size() - 1, lo + 1);
  const double lam = pos - static_cast<double>(lo);
  if (std::isinf(v[hi]) || std::isinf(v[lo])) return lam > 0.0 ? v[hi] : v[lo];
  return v[lo] + lam * (v[hi] - v[lo]);
}

}  // namespace

double ArrivalGrid::sample(const AerialPoint& p) const {
  const double fx = (p.x - xmin) / dx;
  const double fy = (p.y - ymin) / dy;
  if (fx < 0.0 || fy < 0.0 || fx > nx - 1 || fy > ny - 1) return kInf;
  const int i = std::min(static_cast<int>(fx), nx - 2);
  const int j = std::min(static_cast<int>(fy), ny - 2);
  const double u = fx - i;
  const double v = fy - j;
  return (1 - u) * (1 - v) * at(i, j) + u * (1 - v) * at(i + 1, j) + (1 - u) * v * at(i, j + 1) +
         u * v * at(i + 1, j + 1);
}

void ArrivalGrid::write(std::ostream& out) const {
  if (std::fabs(dx - dy) > 1e-12 * std::max(dx, dy)) {
    throw Error(ErrorKind::Config, "arrival grid export needs square cells");
  }
  out << "ncols " << nx << "\nnrows " << ny << "\nxllcorner " << (xmin - 0.5 * dx)
      << "\nyllcorner " << (ymin - 0.5 * dy) << "\ncellsize " << dx << "\n";
  out.precision(9);
  for (int j = ny - 1; j >= 0; --j) {
    for (int i = 0; i < nx; ++i) {
      const double t = at(i, j);
      out << (i ? " " : "") << (std::isfinite(t) ? t : -1.0);
    }
    out << "\n";
  }
}

std::vector<std::pair<int, int>> stencil_offsets(int radius) {
  if (radius < 1) throw Error(ErrorKind::Config, "stencil radius must be positive");
  std::vector<std::pair<int, int>> out;
  for (int i = -radius; i <= radius; ++i)
    for (int j = -radius; j <= radius; ++j)
      if ((i || j) && std::gcd(std::abs(i), std::abs(j)) == 1) out.emplace_back(i, j);
  return out;
}

void require_time_independent(const FireMetric& metric, const Domain& domain, double t_end) {
  const double times[] = {0.0, 0.5 * t_end, t_end};
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const AerialPoint p{domain.xmin + domain.width() * (0.1 + 0.2 * a),
                          domain.ymin + domain.height() * (0.1 + 0.2 * b)};
      const LocalCoefficients c0 = metric.coefficients(times[0], p);
      for (int k = 1; k < 3; ++k) {
        const LocalCoefficients c = metric.coefficients(times[k], p);
        if (c.a != c0.a || c.h != c0.h || c.h_prime != c0.h_prime || c.eps != c0.eps ||
            c.cos_wind != c0.cos_wind || c.sin_wind != c0.sin_wind) {
          std::ostringstream msg;
          msg << "fields change between t=0 and t=" << times[k] << " at (" << p.x << ", " << p.y
              << "); the grid oracle needs a static metric";
          throw Error(ErrorKind::TimeDependentMetric, msg.str());
        }
      }
    }
  }
}

ArrivalGrid grid_arrival(const FireMetric& metric, const Ignition& ignition, const OracleSpec& spec) {
  if (spec.nx < 2 || spec.ny < 2) throw Error(ErrorKind::Config, "oracle grid needs at least 2x2 nodes");
  if (spec.radius != 2 && spec.radius != 3) throw Error(ErrorKind::Config, "oracle radius must be 2 or 3");
  require_time_independent(metric, spec.domain, spec.t_end);

  ArrivalGrid g;
  g.nx = spec.nx;
  g.ny = spec.ny;
  g.xmin = spec.domain.xmin;
  g.ymin = spec.domain.ymin;
  g.dx = spec.domain.width() / (spec.nx - 1);
  g.dy = spec.domain.height() / (spec.ny - 1);
  g.time.assign(static_cast<std::size_t>(g.nx) * g.ny, kInf);

  auto cost = [&](const AerialPoint& p, const AerialPoint& q) {
    return metric.metric_value(0.0, (p + q) * 0.5, q - p);
  };
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  auto set = [&](int i, int j, double t) {
    const std::size_t idx = static_cast<std::size_t>(j) * g.nx + i;
    if (t < g.time[idx]) {
      g.time[idx] = t;
      queue.emplace(t, idx);
    }
  };

  if (!spec.domain.contains(ignition.center) && ignition.kind != Ignition::Kind::Polyline) {
    throw Error(ErrorKind::OutOfDomain, "ignition lies outside the oracle grid");
  }
  if (ignition.kind == Ignition::Kind::Point) {
    const AerialPoint p = ignition.center;
    const int i0 = static_cast<int>(std::floor((p.x - g.xmin) / g.dx));
    const int j0 = static_cast<int>(std::floor((p.y - g.ymin) / g.dy));
    for (int i = i0; i <= i0 + 1; ++i) {
      for (int j = j0; j <= j0 + 1; ++j) {
        if (i < 0 || j < 0 || i >= g.nx || j >= g.ny) continue;
        const AerialPoint q = g.node(i, j);
        set(i, j, norm(q - p) == 0.0 ? 0.0 : cost(p, q));
      }
    }
  } else {
    const std::vector<AerialPoint> poly = ignition_polygon(ignition, 1024);
    for (const AerialPoint& v : poly) {
      if (!spec.domain.contains(v)) throw Error(ErrorKind::OutOfDomain, "ignition lies outside the oracle grid");
    }
    double xlo = poly[0].x, xhi = poly[0].x, ylo = poly[0].y, yhi = poly[0].y;
    for (const AerialPoint& v : poly) {
      xlo = std::min(xlo, v.x);
      xhi = std::max(xhi, v.x);
      ylo = std::min(ylo, v.y);
      yhi = std::max(yhi, v.y);
    }
    const int band = spec.radius;
    const int i0 = std::max(0, static_cast<int>(std::floor((xlo - g.xmin) / g.dx)) - band);
    const int i1 = std::min(g.nx - 1, static_cast<int>(std::ceil((xhi - g.xmin) / g.dx)) + band);
    const int j0 = std::max(0, static_cast<int>(std::floor((ylo - g.ymin) / g.dy)) - band);
    const int j1 = std::min(g.ny - 1, static_cast<int>(std::ceil((yhi - g.ymin) / g.dy)) + band);
    const double reach = band * std::hypot(g.dx, g.dy);
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) {
        const AerialPoint q = g.node(i, j);
        if (geometry::inside_nonzero(poly, q)) {
          set(i, j, 0.0);
          continue;
        }
        double best = kInf;
        for (std::size_t k = 0; k < poly.size(); ++k) {
          const AerialPoint& a = poly[k];
          const double d = norm(q - a);
          if (d > reach) continue;
          best = std::min(best, d == 0.0 ? 0.0 : cost(a, q));
        }
        if (std::isfinite(best)) set(i, j, best);
      }
    }
  }

  const auto offsets = stencil_offsets(spec.radius);
  while (!queue.empty()) {
    const auto [t, idx] = queue.top();
    queue.pop();
    if (t > g.time[idx]) continue;
    const int i = static_cast<int>(idx % static_cast<std::size_t>(g.nx));
    const int j = static_cast<int>(idx / static_cast<std::size_t>(g.nx));
    const AerialPoint p = g.node(i, j);
    for (const auto& [di, dj] : offsets) {
      const int ni = i + di;
      const int nj = j + dj;
      if (ni < 0 || nj < 0 || ni >= g.nx || nj >= g.ny) continue;
      const std::size_t nidx = static_cast<std::size_t>(nj) * g.nx + ni;
      if (g.time[nidx] <= t) continue;
      set(ni, nj, t + cost(p, g.node(ni, nj)));
    }
  }
  return g;
}

FrontComparison compare_front(const ArrivalGrid& arrival, const FrontSnapshot& front) {
  if (front.vertices.empty()) throw Error(ErrorKind::EmptyFront, "front has no vertices");
  if (!(front.t > 0.0)) throw Error(ErrorKind::Config, "front comparison needs t > 0");
  std::vector<double> dev;
  dev.reserve(front.vertices.size());
  for (const FrontVertex& v : front.vertices) {
    dev.push_back(std::fabs(arrival.sample(v.state.position()) - front.t) / front.t);
  }
  FrontComparison c;
  c.count = dev.size();
  c.median = quantile(dev, 0.5);
  c.p95 = quantile(dev, 0.95);
  c.max = *std::max_element(dev.begin(), dev.end());
  return c;
}

}  // namespace firefront
