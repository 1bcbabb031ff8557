#include "firefront/terrain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "firefront/error.hpp"

namespace firefront {

namespace {

[[noreturn]] void out_of_domain(const AerialPoint& p) {
  std::ostringstream msg;
  msg << "point (" << p.x << ", " << p.y << ") lies outside the terrain domain";
  throw Error(ErrorKind::OutOfDomain, msg.str());
}

// Catmull-Rom basis and its derivative at parameter s in [0, 1].
void catmull_rom_weights(double s, double w[4], double dw[4]) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  w[0] = 0.5 * (-s3 + 2.0 * s2 - s);
  w[1] = 0.5 * (3.0 * s3 - 5.0 * s2 + 2.0);
  w[2] = 0.5 * (-3.0 * s3 + 4.0 * s2 + s);
  w[3] = 0.5 * (s3 - s2);
  dw[0] = 0.5 * (-3.0 * s2 + 4.0 * s - 1.0);
  dw[1] = 0.5 * (9.0 * s2 - 10.0 * s);
  dw[2] = 0.5 * (-9.0 * s2 + 8.0 * s + 1.0);
  dw[3] = 0.5 * (3.0 * s2 - 2.0 * s);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

double Domain::distance_to_boundary(const AerialPoint& p) const {
  return std::min({p.x - xmin, xmax - p.x, p.y - ymin, ymax - p.y});
}

// ---------------------------------------------------------------------------
// GridDem

GridDem::GridDem(int ncols, int nrows, double xllcorner, double yllcorner,
                 double cellsize, std::vector<double> heights)
    : ncols_(ncols),
      nrows_(nrows),
      xll_(xllcorner),
      yll_(yllcorner),
      cellsize_(cellsize),
      heights_(std::move(heights)) {
  if (ncols_ < 2 || nrows_ < 2) {
    throw Error(ErrorKind::Config, "DEM: ncols and nrows must be at least 2");
  }
  if (!(cellsize_ > 0.0)) {
    throw Error(ErrorKind::Config, "DEM: cellsize must be positive");
  }
  if (heights_.size() != static_cast<std::size_t>(ncols_) * nrows_) {
    throw Error(ErrorKind::Config, "DEM: expected " + std::to_string(ncols_ * nrows_) +
                                       " heights, got " + std::to_string(heights_.size()));
  }
}

GridDem GridDem::read(std::istream& in) {
  int ncols = -1;
  int nrows = -1;
  double xll = std::numeric_limits<double>::quiet_NaN();
  double yll = xll;
  double cellsize = xll;
  // Five header lines, any order.
  for (int seen = 0; seen < 5; ++seen) {
    std::string key;
    if (!(in >> key)) throw Error(ErrorKind::Config, "DEM: truncated header");
    const std::string k = lower(key);
    if (k == "nodata_value") {
      throw Error(ErrorKind::Config, "DEM: NODATA_value is not supported");
    }
    bool ok = true;
    if (k == "ncols") {
      ok = static_cast<bool>(in >> ncols);
    } else if (k == "nrows") {
      ok = static_cast<bool>(in >> nrows);
    } else if (k == "xllcorner") {
      ok = static_cast<bool>(in >> xll);
    } else if (k == "yllcorner") {
      ok = static_cast<bool>(in >> yll);
    } else if (k == "cellsize") {
      ok = static_cast<bool>(in >> cellsize);
    } else {
      throw Error(ErrorKind::Config, "DEM: unknown header key '" + key + "'");
    }
    if (!ok) throw Error(ErrorKind::Config, "DEM: bad value for header key '" + key + "'");
  }
  if (ncols < 0 || nrows < 0 || std::isnan(xll) || std::isnan(yll) || std::isnan(cellsize)) {
    throw Error(ErrorKind::Config, "DEM: incomplete header");
  }
  // A sixth header line is only legal if it is NODATA, which we reject.
  in >> std::ws;
  if (std::isalpha(in.peek())) {
    std::string key;
    in >> key;
    if (lower(key) == "nodata_value") {
      throw Error(ErrorKind::Config, "DEM: NODATA_value is not supported");
    }
    throw Error(ErrorKind::Config, "DEM: unknown header key '" + key + "'");
  }
  std::vector<double> heights;
  heights.reserve(static_cast<std::size_t>(std::max(0, ncols * nrows)));
  for (long i = 0; i < static_cast<long>(ncols) * nrows; ++i) {
    double v;
    if (!(in >> v)) throw Error(ErrorKind::Config, "DEM: too few height values");
    heights.push_back(v);
  }
  return GridDem(ncols, nrows, xll, yll, cellsize, std::move(heights));
}

GridDem GridDem::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "DEM: cannot open '" + path + "'");
  return read(in);
}

void GridDem::write(std::ostream& out) const {
  out << "ncols " << ncols_ << "\n"
      << "nrows " << nrows_ << "\n"
      << std::setprecision(17) << "xllcorner " << xll_ << "\n"
      << "yllcorner " << yll_ << "\n"
      << "cellsize " << cellsize_ << "\n";
  out << std::setprecision(17);
  for (int r = 0; r < nrows_; ++r) {
    for (int c = 0; c < ncols_; ++c) {
      if (c) out << ' ';
      out << heights_[static_cast<std::size_t>(r) * ncols_ + c];
    }
    out << "\n";
  }
}

double GridDem::node(int i, int j) const {
  const int row = nrows_ - 1 - j;
  return heights_[static_cast<std::size_t>(row) * ncols_ + i];
}

AerialPoint GridDem::node_position(int i, int j) const {
  return {xll_ + (i + 0.5) * cellsize_, yll_ + (j + 0.5) * cellsize_};
}

Domain GridDem::extent() const {
  const AerialPoint lo = node_position(0, 0);
  const AerialPoint hi = node_position(ncols_ - 1, nrows_ - 1);
  return {lo.x, hi.x, lo.y, hi.y};
}

// Linear extrapolation one node past each edge, so that planes are
// reproduced exactly by the interpolant all the way to the boundary.
double GridDem::extended(int i, int j) const {
  if (i < 0) return 2.0 * extended(0, j) - extended(1, j);
  if (i > ncols_ - 1) return 2.0 * extended(ncols_ - 1, j) - extended(ncols_ - 2, j);
  if (j < 0) return 2.0 * extended(i, 0) - extended(i, 1);
  if (j > nrows_ - 1) return 2.0 * extended(i, nrows_ - 1) - extended(i, nrows_ - 2);
  return node(i, j);
}

GridDem::Sample GridDem::interpolate(const AerialPoint& p) const {
  const Domain box = extent();
  if (!box.contains(p)) out_of_domain(p);
  const double u = (p.x - box.xmin) / cellsize_;
  const double v = (p.y - box.ymin) / cellsize_;
  const int i = std::clamp(static_cast<int>(std::floor(u)), 0, ncols_ - 2);
  const int j = std::clamp(static_cast<int>(std::floor(v)), 0, nrows_ - 2);
  double wx[4], dwx[4], wy[4], dwy[4];
  catmull_rom_weights(u - i, wx, dwx);
  catmull_rom_weights(v - j, wy, dwy);
  double z = 0.0, zx = 0.0, zy = 0.0;
  for (int b = 0; b < 4; ++b) {
    for (int a = 0; a < 4; ++a) {
      const double h = extended(i - 1 + a, j - 1 + b);
      z += wx[a] * wy[b] * h;
      zx += dwx[a] * wy[b] * h;
      zy += wx[a] * dwy[b] * h;
    }
  }
  return {z, zx / cellsize_, zy / cellsize_};
}

// ---------------------------------------------------------------------------
// Terrain

Terrain::Terrain(Surface surface, const Domain& domain, double margin)
    : surface_(std::move(surface)), domain_(domain), margin_(margin) {
  if (!(domain_.xmax > domain_.xmin) || !(domain_.ymax > domain_.ymin)) {
    throw Error(ErrorKind::Config, "domain: empty rectangle");
  }
}

Terrain Terrain::plane(double gx, double gy, const Domain& domain, double z0) {
  return Terrain(PlaneSurface{gx, gy, z0}, domain, 1e-3 * domain.width());
}

Terrain Terrain::gaussian(std::vector<GaussianBump> bumps, const Domain& domain,
                          double base) {
  for (const auto& b : bumps) {
    if (!(b.sx > 0.0) || !(b.sy > 0.0)) {
      throw Error(ErrorKind::Config, "terrain: gaussian widths must be positive");
    }
  }
  return Terrain(GaussianSurface{std::move(bumps), base}, domain, 1e-3 * domain.width());
}

Terrain Terrain::grid(GridDem dem) {
  const Domain box = dem.extent();
  const double margin = dem.cellsize();
  return Terrain(std::make_shared<const GridDem>(std::move(dem)), box, margin);
}

bool Terrain::is_grid() const {
  return std::holds_alternative<std::shared_ptr<const GridDem>>(surface_);
}

double Terrain::feature_scale() const {
  if (const auto* gauss = std::get_if<GaussianSurface>(&surface_)) {
    double w = std::numeric_limits<double>::infinity();
    for (const auto& b : gauss->bumps) w = std::min({w, b.sx, b.sy});
    return w;
  }
  if (const auto* dem = std::get_if<std::shared_ptr<const GridDem>>(&surface_)) return (*dem)->cellsize();
  return std::numeric_limits<double>::infinity();
}

SurfaceSample Terrain::sample(const AerialPoint& p) const {
  if (!domain_.contains(p)) out_of_domain(p);
  if (const auto* plane = std::get_if<PlaneSurface>(&surface_)) {
    return {plane->gx * p.x + plane->gy * p.y + plane->z0, plane->gx, plane->gy};
  }
  if (const auto* gauss = std::get_if<GaussianSurface>(&surface_)) {
    SurfaceSample s{gauss->base, 0.0, 0.0};
    for (const auto& b : gauss->bumps) {
      const double kx = std::isinf(b.sx) ? 0.0 : 1.0 / (b.sx * b.sx);
      const double ky = std::isinf(b.sy) ? 0.0 : 1.0 / (b.sy * b.sy);
      const double dx = p.x - b.cx;
      const double dy = p.y - b.cy;
      const double e = b.amplitude * std::exp(-0.5 * (kx * dx * dx + ky * dy * dy));
      s.z += e;
      s.gx -= kx * dx * e;
      s.gy -= ky * dy * e;
    }
    return s;
  }
  const auto& dem = std::get<std::shared_ptr<const GridDem>>(surface_);
  const auto g = dem->interpolate(p);
  return {g.z, g.dzdx, g.dzdy};
}

Vec2 Terrain::gradient(const AerialPoint& p) const {
  const auto s = sample(p);
  return {s.gx, s.gy};
}

double Terrain::slant_angle(const AerialPoint& p) const {
  const auto s = sample(p);
  return std::acos(1.0 / std::sqrt(1.0 + s.gx * s.gx + s.gy * s.gy));
}

double Terrain::slope_angle(const AerialPoint& p, double theta) const {
  const Vec3 u = surface_unit_dir(p, theta);
  return std::acos(std::clamp(u.z, -1.0, 1.0));
}

Vec3 Terrain::surface_unit_dir(const AerialPoint& p, double theta) const {
  const Vec3 d = lift(p, unit_dir(theta));
  const double n = norm(d);
  return {d.x / n, d.y / n, d.z / n};
}

Vec3 Terrain::lift(const AerialPoint& p, const TangentVector& v) const {
  const auto s = sample(p);
  return {v.x, v.y, s.gx * v.x + s.gy * v.y};
}

}  // namespace firefront
