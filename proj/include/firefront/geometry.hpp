#pragma once

#include <optional>
#include <vector>

#include "firefront/vec.hpp"

namespace firefront::geometry {

/// Coordinates are snapped to this grid before orientation tests, which are
/// then evaluated exactly in integer arithmetic.
inline constexpr double kSnap = 1e-12;

/// Sign of the orientation of (a, b, c): +1 counter-clockwise, -1 clockwise,
/// 0 collinear (after snapping).
int orientation(const Vec2& a, const Vec2& b, const Vec2& c);

struct SegmentHit {
  double s = 0.0;  ///< parameter along the first segment, in (0, 1)
  double u = 0.0;  ///< parameter along the second segment, in (0, 1)
  Vec2 point;
};

/// Proper crossing of [p0, p1] and [q0, q1]. Touching at an endpoint or
/// collinear overlap does not count.
std::optional<SegmentHit> proper_intersection(const Vec2& p0, const Vec2& p1, const Vec2& q0,
                                              const Vec2& q1);

/// Shoelace signed area; positive for counter-clockwise polygons.
double signed_area(const std::vector<Vec2>& polygon);
double perimeter(const std::vector<Vec2>& polyline, bool closed);

/// Winding number of the closed polygon around p. Points on the boundary
/// report 0.
int winding_number(const std::vector<Vec2>& polygon, const Vec2& p);
/// Strictly inside under the nonzero rule.
inline bool inside_nonzero(const std::vector<Vec2>& polygon, const Vec2& p) {
  return winding_number(polygon, p) != 0;
}

/// Euclidean distance from p to the segment [a, b].
double distance_to_segment(const Vec2& p, const Vec2& a, const Vec2& b);

}  // namespace firefront::geometry
