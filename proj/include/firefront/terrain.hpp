#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "firefront/vec.hpp"

namespace firefront {

/// Axis-aligned rectangle of aerial coordinates.
struct Domain {
  double xmin = -10.0;
  double xmax = 10.0;
  double ymin = -10.0;
  double ymax = 10.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double scale() const { return width() > height() ? width() : height(); }
  bool contains(const AerialPoint& p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  /// Distance from p to the nearest edge (negative outside).
  double distance_to_boundary(const AerialPoint& p) const;
};

/// z = gx*x + gy*y + z0.
struct PlaneSurface {
  double gx = 0.0;
  double gy = 0.0;
  double z0 = 0.0;
};

/// amplitude * exp(-(x-cx)^2/(2 sx^2) - (y-cy)^2/(2 sy^2)); an infinite
/// width removes the dependence on that axis.
struct GaussianBump {
  double amplitude = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  double sx = 1.0;
  double sy = 1.0;
};

struct GaussianSurface {
  std::vector<GaussianBump> bumps;
  double base = 0.0;
};

/// Height grid in ESRI ASCII layout. Nodes sit at cell centres; row 0 of
/// `heights` is the northernmost row, as in the file.
class GridDem {
 public:
  GridDem(int ncols, int nrows, double xllcorner, double yllcorner,
          double cellsize, std::vector<double> heights);

  static GridDem read(std::istream& in);
  static GridDem load(const std::string& path);
  void write(std::ostream& out) const;

  int ncols() const { return ncols_; }
  int nrows() const { return nrows_; }
  double xllcorner() const { return xll_; }
  double yllcorner() const { return yll_; }
  double cellsize() const { return cellsize_; }
  /// Height at column i, row j counted from the south (j = 0 southmost).
  double node(int i, int j) const;
  AerialPoint node_position(int i, int j) const;
  /// Rectangle spanned by the node centres.
  Domain extent() const;

  struct Sample {
    double z;
    double dzdx;
    double dzdy;
  };
  /// Catmull-Rom bicubic interpolant and its analytic gradient.
  Sample interpolate(const AerialPoint& p) const;

 private:
  double extended(int i, int j) const;

  int ncols_;
  int nrows_;
  double xll_;
  double yll_;
  double cellsize_;
  std::vector<double> heights_;
};

/// Elevation and first partials at one point.
struct SurfaceSample {
  double z = 0.0;
  double gx = 0.0;
  double gy = 0.0;
};

/// The surface z(x, y) over a rectangular domain. Immutable once built.
class Terrain {
 public:
  static Terrain plane(double gx, double gy, const Domain& domain, double z0 = 0.0);
  static Terrain gaussian(std::vector<GaussianBump> bumps, const Domain& domain,
                          double base = 0.0);
  static Terrain grid(GridDem dem);

  const Domain& domain() const { return domain_; }
  /// Distance from the boundary at which trajectories are retired.
  double boundary_margin() const { return margin_; }
  bool is_grid() const;
  /// Smallest length over which the surface changes shape: the narrowest
  /// Gaussian width or the DEM cellsize; infinite for a plane.
  double feature_scale() const;

  /// Throws OutOfDomain outside the domain rectangle.
  SurfaceSample sample(const AerialPoint& p) const;
  double elevation(const AerialPoint& p) const { return sample(p).z; }
  Vec2 gradient(const AerialPoint& p) const;

  /// Inclination of the tangent plane, in [0, pi/2).
  double slant_angle(const AerialPoint& p) const;
  /// Angle between the vertical axis and the surface direction over the
  /// aerial heading theta, in (0, pi).
  double slope_angle(const AerialPoint& p, double theta) const;
  /// Euclidean-unit vector of R^3 tangent to the surface over heading theta.
  Vec3 surface_unit_dir(const AerialPoint& p, double theta) const;
  /// Push-forward d z-hat_p(v) = (v1, v2, dz_p(v)).
  Vec3 lift(const AerialPoint& p, const TangentVector& v) const;

 private:
  using Surface = std::variant<PlaneSurface, GaussianSurface,
                               std::shared_ptr<const GridDem>>;
  Terrain(Surface surface, const Domain& domain, double margin);

  Surface surface_;
  Domain domain_;
  double margin_;
};

}  // namespace firefront
