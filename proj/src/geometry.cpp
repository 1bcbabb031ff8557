#include "firefront/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace firefront::geometry {

namespace {

__extension__ typedef __int128 Int128;

struct Snapped {
  std::int64_t x;
  std::int64_t y;
};

Snapped snap(const Vec2& p) {
  return {static_cast<std::int64_t>(std::llround(p.x / kSnap)),
          static_cast<std::int64_t>(std::llround(p.y / kSnap))};
}

int orient(const Snapped& a, const Snapped& b, const Snapped& c) {
  const Int128 det = static_cast<Int128>(b.x - a.x) * (c.y - a.y) -
                       static_cast<Int128>(b.y - a.y) * (c.x - a.x);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

bool on_segment(const Snapped& a, const Snapped& b, const Snapped& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  return orient(snap(a), snap(b), snap(c));
}

std::optional<SegmentHit> proper_intersection(const Vec2& p0, const Vec2& p1, const Vec2& q0,
                                              const Vec2& q1) {
  const Snapped a = snap(p0), b = snap(p1), c = snap(q0), d = snap(q1);
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 >= 0 || o3 * o4 >= 0) return std::nullopt;
  const Vec2 r = p1 - p0;
  const Vec2 q = q1 - q0;
  const double denom = cross(r, q);
  SegmentHit hit;
  hit.s = std::clamp(cross(q0 - p0, q) / denom, 0.0, 1.0);
  hit.u = std::clamp(cross(q0 - p0, r) / denom, 0.0, 1.0);
  hit.point = p0 + r * hit.s;
  return hit;
}

double signed_area(const std::vector<Vec2>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += cross(polygon[i], polygon[(i + 1) % n]);
  return 0.5 * sum;
}

double perimeter(const std::vector<Vec2>& polyline, bool closed) {
  const std::size_t n = polyline.size();
  if (n < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) sum += norm(polyline[i + 1] - polyline[i]);
  if (closed) sum += norm(polyline.front() - polyline.back());
  return sum;
}

int winding_number(const std::vector<Vec2>& polygon, const Vec2& p) {
  const std::size_t n = polygon.size();
  if (n < 3) return 0;
  const Snapped sp = snap(p);
  int wn = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Snapped a = snap(polygon[i]);
    const Snapped b = snap(polygon[(i + 1) % n]);
    if (on_segment(a, b, sp)) return 0;
    if (a.y <= sp.y) {
      if (b.y > sp.y && orient(a, b, sp) > 0) ++wn;
    } else if (b.y <= sp.y && orient(a, b, sp) < 0) {
      --wn;
    }
  }
  return wn;
}

double distance_to_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return norm(p - a);
  const double s = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return norm(p - (a + d * s));
}

}  // namespace firefront::geometry
