#include "firefront/output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace firefront {

namespace {

constexpr int kIndicatrixVertices = 256;

std::string status_text(const Trajectory& tr) { return to_string(tr.status); }

void write_row(std::ostream& out, double t, const Trajectory& tr, const AerialPoint& p, const Vec2& v,
               double z, const std::string& status) {
  out << format_number(t) << ',' << tr.id << ',' << format_number(tr.seed_param) << ','
      << format_number(p.x) << ',' << format_number(p.y) << ',' << format_number(z) << ','
      << format_number(v.x) << ',' << format_number(v.y) << ',' << status << '\n';
}

double safe_elevation(const Terrain& terrain, const AerialPoint& p) {
  try {
    return terrain.elevation(p);
  } catch (const std::exception&) {
    return std::nan("");
  }
}

// Maps world coordinates to an SVG viewport with y pointing up.
class Viewport {
 public:
  Viewport(const Domain& d, double width) : d_(d), width_(width) {
    scale_ = width / d.width();
    height_ = d.height() * scale_;
  }
  double x(double wx) const { return (wx - d_.xmin) * scale_; }
  double y(double wy) const { return (d_.ymax - wy) * scale_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double scale() const { return scale_; }

 private:
  Domain d_;
  double width_;
  double height_ = 0.0;
  double scale_ = 1.0;
};

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string time_color(double frac) {
  static const std::array<std::array<double, 3>, 5> stops{{{68, 1, 84},
                                                           {59, 82, 139},
                                                           {33, 145, 140},
                                                           {94, 201, 98},
                                                           {253, 231, 37}}};
  frac = std::clamp(frac, 0.0, 1.0) * (stops.size() - 1);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(frac), stops.size() - 2);
  const double lam = frac - static_cast<double>(i);
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(stops[i][0] + lam * (stops[i + 1][0] - stops[i][0]))),
                static_cast<int>(std::lround(stops[i][1] + lam * (stops[i + 1][1] - stops[i][1]))),
                static_cast<int>(std::lround(stops[i][2] + lam * (stops[i + 1][2] - stops[i][2]))));
  return buf;
}

void svg_header(std::ostream& out, const Viewport& vp) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_num(vp.width()) << "\" height=\""
      << svg_num(vp.height()) << "\" viewBox=\"0 0 " << svg_num(vp.width()) << ' ' << svg_num(vp.height())
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

// Marching squares on a regular sample of the elevation.
void svg_contours(std::ostream& out, const Terrain& terrain, const Viewport& vp) {
  const Domain& d = terrain.domain();
  const int n = 160;
  std::vector<double> z(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(j * (n + 1) + i)]; };
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      at(i, j) = safe_elevation(terrain, {d.xmin + d.width() * i / n, d.ymin + d.height() * j / n});
      lo = std::min(lo, at(i, j));
      hi = std::max(hi, at(i, j));
    }
  }
  if (!(hi > lo)) return;
  out << "<g stroke=\"#b8a888\" stroke-width=\"0.6\" fill=\"none\">\n";
  const int levels = 12;
  for (int l = 1; l < levels; ++l) {
    const double c = lo + (hi - lo) * l / levels;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const std::array<double, 4> v{at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
        const std::array<std::pair<double, double>, 4> corner{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
        std::vector<std::pair<double, double>> pts;
        for (int e = 0; e < 4; ++e) {
          const double a = v[static_cast<std::size_t>(e)];
          const double b = v[static_cast<std::size_t>((e + 1) % 4)];
          if ((a < c) == (b < c)) continue;
          const double lam = (c - a) / (b - a);
          const auto& p = corner[static_cast<std::size_t>(e)];
          const auto& q = corner[static_cast<std::size_t>((e + 1) % 4)];
          pts.emplace_back(i + p.first + lam * (q.first - p.first), j + p.second + lam * (q.second - p.second));
        }
        for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
          out << "<line x1=\"" << svg_num(vp.x(d.xmin + d.width() * pts[k].first / n)) << "\" y1=\""
              << svg_num(vp.y(d.ymin + d.height() * pts[k].second / n)) << "\" x2=\""
              << svg_num(vp.x(d.xmin + d.width() * pts[k + 1].first / n)) << "\" y2=\""
              << svg_num(vp.y(d.ymin + d.height() * pts[k + 1].second / n)) << "\"/>\n";
        }
      }
    }
  }
  out << "</g>\n";
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_fronts_csv(std::ostream& out, const FireMap& map, const Terrain& terrain) {
  out << "t,trajectory_id,seed_param,x,y,z,vx,vy,status\n";
  for (const FrontSnapshot& snap : map.fronts) {
    for (const FrontVertex& v : snap.vertices) {
      const Trajectory* tr = map.find(v.id);
      const AerialPoint p = v.state.position();
      write_row(out, snap.t, *tr, p, v.state.velocity(), safe_elevation(terrain, p), "live");
    }
    for (int id : snap.terminated) {
      const Trajectory* tr = map.find(id);
      const GeodesicState s = tr->state_at(tr->t_end);
      write_row(out, tr->t_end, *tr, tr->end_point, s.velocity(), safe_elevation(terrain, tr->end_point),
                status_text(*tr));
    }
  }
}

void write_cuts_csv(std::ostream& out, const FireMap& map) {
  out << "t_cut,x,y,kind,ids\n";
  for (const CutRecord& c : map.cuts) {
    out << format_number(c.t_cut) << ',' << format_number(c.point.x) << ',' << format_number(c.point.y) << ','
        << to_string(c.kind) << ',';
    for (std::size_t i = 0; i < c.ids.size(); ++i) out << (i ? ";" : "") << c.ids[i];
    out << '\n';
  }
}

void write_trajectories_csv(std::ostream& out, const FireMap& map, const Terrain& terrain) {
  out << "t,trajectory_id,seed_param,x,y,z,vx,vy,status\n";
  for (const Trajectory& tr : map.trajectories) {
    for (const GeodesicState& s : tr.path) {
      if (!tr.live() && s.t >= tr.t_end) break;
      write_row(out, s.t, tr, s.position(), s.velocity(), safe_elevation(terrain, s.position()), "live");
    }
    if (!tr.live()) {
      const GeodesicState s = tr.state_at(tr.t_end);
      write_row(out, tr.t_end, tr, tr.end_point, s.velocity(), safe_elevation(terrain, tr.end_point),
                status_text(tr));
    }
  }
}

void write_fronts_svg(std::ostream& out, const FireMap& map, const Terrain& terrain, bool contours) {
  const Viewport vp(terrain.domain(), 800.0);
  svg_header(out, vp);
  if (contours) svg_contours(out, terrain, vp);
  if (!map.minimizing) {
    out << "<text x=\"8\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#c00000\">"
           "non-minimizing: metric failed the convexity audit</text>\n";
  }

  out << "<g stroke=\"#9a9a9a\" stroke-width=\"0.5\" fill=\"none\">\n";
  for (const Trajectory& tr : map.trajectories) {
    out << "<polyline points=\"";
    for (const GeodesicState& s : tr.path) {
      if (!tr.live() && s.t > tr.t_end) break;
      out << svg_num(vp.x(s.x)) << ',' << svg_num(vp.y(s.y)) << ' ';
    }
    if (!tr.live()) out << svg_num(vp.x(tr.end_point.x)) << ',' << svg_num(vp.y(tr.end_point.y));
    out << "\"/>\n";
  }
  out << "</g>\n";

  const double t_max = map.fronts.empty() ? 1.0 : std::max(map.fronts.back().t, 1e-300);
  for (const FrontSnapshot& snap : map.fronts) {
    const std::string color = time_color(snap.t / t_max);
    const std::size_t m = snap.vertices.size();
    if (m == 0) continue;
    out << "<g stroke=\"" << color << "\" stroke-width=\"1.6\" fill=\"none\" data-t=\"" << format_number(snap.t)
        << "\">\n";
    if (m == 1) {
      const AerialPoint p = snap.vertices[0].state.position();
      out << "<circle cx=\"" << svg_num(vp.x(p.x)) << "\" cy=\"" << svg_num(vp.y(p.y)) << "\" r=\"2\" fill=\""
          << color << "\"/>\n";
    }
    const std::size_t edges = snap.closed ? m : m - 1;
    for (std::size_t e = 0; e < edges && m > 1; ++e) {
      const AerialPoint a = snap.vertices[e].state.position();
      const AerialPoint b = snap.vertices[(e + 1) % m].state.position();
      out << "<line x1=\"" << svg_num(vp.x(a.x)) << "\" y1=\"" << svg_num(vp.y(a.y)) << "\" x2=\""
          << svg_num(vp.x(b.x)) << "\" y2=\"" << svg_num(vp.y(b.y)) << '"';
      if (snap.vertices[e].bridge_to_next) out << " stroke-dasharray=\"4 3\"";
      out << "/>\n";
    }
    out << "</g>\n";
  }

  for (const CutRecord& c : map.cuts) {
    const double x = vp.x(c.point.x);
    const double y = vp.y(c.point.y);
    if (c.kind == CutKind::Focal) {
      out << "<circle cx=\"" << svg_num(x) << "\" cy=\"" << svg_num(y)
          << "\" r=\"3\" fill=\"none\" stroke=\"#1f5fd0\" stroke-width=\"1.2\"/>\n";
    } else {
      out << "<path d=\"M" << svg_num(x - 3) << ',' << svg_num(y - 3) << " L" << svg_num(x + 3) << ','
          << svg_num(y + 3) << " M" << svg_num(x - 3) << ',' << svg_num(y + 3) << " L" << svg_num(x + 3) << ','
          << svg_num(y - 3) << "\" stroke=\"#d0201f\" stroke-width=\"1.2\"/>\n";
    }
  }
  out << "</svg>\n";
}

void write_indicatrix_svg(std::ostream& out, const FireMetric& metric, const IndicatrixSettings& settings,
                          bool contours) {
  const Domain& d = metric.terrain().domain();
  const Viewport vp(d, 800.0);
  svg_header(out, vp);
  if (contours) svg_contours(out, metric.terrain(), vp);

  const double cw = d.width() / settings.nx;
  const double ch = d.height() / settings.ny;
  struct Cell {
    AerialPoint p;
    std::vector<Vec2> sigma, ellipse, circle;
  };
  std::vector<Cell> cells;
  double reach = 0.0;
  for (int j = 0; j < settings.ny; ++j) {
    for (int i = 0; i < settings.nx; ++i) {
      Cell cell;
      cell.p = {d.xmin + (i + 0.5) * cw, d.ymin + (j + 0.5) * ch};
      const LocalMetric m = metric.at(settings.t, cell.p);
      const LocalCoefficients& c = m.coefficients();
      const double A = c.a * (1.0 - c.eps * c.eps);
      for (int k = 0; k < kIndicatrixVertices; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / kIndicatrixVertices;
        const Vec2 u = unit_dir(theta);
        const Vec2 v = m.indicatrix_point(theta);
        cell.sigma.push_back(v);
        reach = std::max(reach, norm(v));
        if (settings.overlay) {
          const double al = m.alpha(u);
          cell.ellipse.push_back(u * (A / (1.0 - c.eps * m.omega(u) / al) / al));
          cell.circle.push_back(u * ((c.h + c.h_prime * m.beta(u) / al) / al));
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  const double scale = settings.scale > 0.0 ? settings.scale : 0.45 * std::min(cw, ch) / std::max(reach, 1e-300);
  auto polygon = [&](const AerialPoint& p, const std::vector<Vec2>& pts, const std::string& style) {
    out << "<polygon points=\"";
    for (const Vec2& v : pts) out << svg_num(vp.x(p.x + scale * v.x)) << ',' << svg_num(vp.y(p.y + scale * v.y)) << ' ';
    out << "\" " << style << "/>\n";
  };
  for (const Cell& cell : cells) {
    if (settings.overlay) {
      polygon(cell.p, cell.ellipse, "fill=\"none\" stroke=\"#2a7fd4\" stroke-width=\"0.8\" stroke-dasharray=\"3 2\"");
      polygon(cell.p, cell.circle, "fill=\"none\" stroke=\"#3aa655\" stroke-width=\"0.8\" stroke-dasharray=\"3 2\"");
    }
    polygon(cell.p, cell.sigma, "fill=\"#f3c9a5\" fill-opacity=\"0.5\" stroke=\"#c0501f\" stroke-width=\"1.2\"");
    out << "<circle cx=\"" << svg_num(vp.x(cell.p.x)) << "\" cy=\"" << svg_num(vp.y(cell.p.y))
        << "\" r=\"1.5\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace firefront
