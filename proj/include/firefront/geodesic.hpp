#pragma once

#include <array>
#include <vector>

#include "firefront/metric.hpp"
#include "firefront/vec.hpp"

namespace firefront {

/// Point of a t-parametrised trajectory; the spacetime velocity is (1, vx, vy).
struct GeodesicState {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double vx = 0.0;
  double vy = 0.0;

  AerialPoint position() const { return {x, y}; }
  Vec2 velocity() const { return {vx, vy}; }
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Fundamental tensor of G = dt^2 - F^2 at (1, v) in coordinates (t, x, y),
/// with its inverse.
struct SpacetimeTensor {
  Matrix3 g{};
  Matrix3 g_inv{};
};

/// gamma[k][i][j], symmetric in (i, j).
struct ChristoffelSample {
  std::array<Matrix3, 3> gamma{};
};

struct GeodesicOptions {
  /// Project the velocity back onto the indicatrix after every step.
  bool renormalize = true;
  /// Finite-difference step for coordinate derivatives of the tensor;
  /// 0 selects 1e-5 * domain scale.
  double fd_step = 0.0;
};

/// Lightlike geodesics of G = dt^2 - F^2, parametrised by t.
class GeodesicSolver {
 public:
  explicit GeodesicSolver(FireMetric metric, GeodesicOptions options = {});

  const FireMetric& metric() const { return metric_; }
  const GeodesicOptions& options() const { return options_; }
  double fd_step() const { return fd_step_; }

  /// Throws SingularTensor if the spatial block is not positive definite.
  SpacetimeTensor spacetime_tensor(double t, const AerialPoint& p, const Vec2& v) const;
  /// Formal Christoffel symbols: coordinate derivatives of g_ij taken at a
  /// fixed direction argument (1, v), by central differences.
  ChristoffelSample christoffel(double t, const AerialPoint& p, const Vec2& v) const;
  /// Acceleration (d vx/dt, d vy/dt) from
  ///   x''^k = -gamma^k_ij x'^i x'^j + gamma^0_ij x'^i x'^j x'^k, x'^0 = 1.
  Vec2 rhs(const GeodesicState& s) const;
  /// Classical fourth-order Runge-Kutta step on (x, y, vx, vy).
  GeodesicState rk4_step(const GeodesicState& s, double dt) const;
  /// |F(v) - 1| at the state.
  double lightlike_defect(const GeodesicState& s) const;

  /// F-unit vector F-orthogonal to the front tangent w with det[v | w] > 0
  /// (outward for a counter-clockwise front). Coarse 720-point heading scan
  /// followed by bisection on g_v(v, w).
  Vec2 initial_velocity(double t, const AerialPoint& p, const Vec2& w) const;
  /// n indicatrix points at equally spaced headings starting from theta = 0.
  std::vector<Vec2> ignition_fan(double t, const AerialPoint& p, int n) const;

 private:
  Matrix3 spatial_block(double t, const AerialPoint& p, const Vec2& v) const;

  FireMetric metric_;
  GeodesicOptions options_;
  double fd_step_;
  bool time_dependent_;
};

}  // namespace firefront
