#include "firefront/front.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "firefront/error.hpp"
#include "firefront/geometry.hpp"

namespace firefront {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string point_text(const AerialPoint& p) {
  std::ostringstream out;
  out << "(" << p.x << ", " << p.y << ")";
  return out.str();
}

struct CurveSample {
  double s;
  AerialPoint p;
  Vec2 tangent;
};

std::vector<CurveSample> sample_curve(const Ignition& ig, int n, std::vector<std::string>* warnings) {
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  switch (ig.kind) {
    case Ignition::Kind::Circle: {
      if (!(ig.radius > 0.0)) throw Error(ErrorKind::DegenerateCurve, "circle radius must be positive");
      for (int k = 0; k < n; ++k) {
        const double s = kTwoPi * k / n;
        out.push_back({s, ig.center + unit_dir(s) * ig.radius, {-std::sin(s), std::cos(s)}});
      }
      break;
    }
    case Ignition::Kind::Ellipse: {
      if (!(ig.semi_major > 0.0) || !(ig.semi_minor > 0.0)) {
        throw Error(ErrorKind::DegenerateCurve, "ellipse semi-axes must be positive");
      }
      const double c = std::cos(ig.rotation);
      const double sn = std::sin(ig.rotation);
      auto rotate = [&](const Vec2& v) { return Vec2{c * v.x - sn * v.y, sn * v.x + c * v.y}; };
      for (int k = 0; k < n; ++k) {
        const double s = kTwoPi * k / n;
        const Vec2 local{ig.semi_major * std::cos(s), ig.semi_minor * std::sin(s)};
        const Vec2 dlocal{-ig.semi_major * std::sin(s), ig.semi_minor * std::cos(s)};
        out.push_back({s, ig.center + rotate(local), rotate(dlocal)});
      }
      break;
    }
    case Ignition::Kind::Polyline: {
      std::vector<AerialPoint> v = ig.vertices;
      if (v.size() < 3) throw Error(ErrorKind::DegenerateCurve, "polyline needs at least 3 vertices");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (norm(v[(i + 1) % v.size()] - v[i]) == 0.0) {
          throw Error(ErrorKind::DegenerateCurve,
                      "repeated polyline vertex " + std::to_string(i) + " at " + point_text(v[i]));
        }
      }
      const double area = geometry::signed_area(v);
      if (area == 0.0) throw Error(ErrorKind::DegenerateCurve, "polyline encloses no area");
      if (area < 0.0) {
        std::reverse(v.begin(), v.end());
        if (warnings) warnings->push_back("ignition polyline was clockwise; reversed");
      }
      const double total = geometry::perimeter(v, true);
      std::vector<double> cum(v.size() + 1, 0.0);
      for (std::size_t i = 0; i < v.size(); ++i) cum[i + 1] = cum[i] + norm(v[(i + 1) % v.size()] - v[i]);
      auto at = [&](double s) {
        s = std::fmod(s, total);
        if (s < 0.0) s += total;
        std::size_t i = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), s) - cum.begin()) - 1;
        i = std::min(i, v.size() - 1);
        const double lam = (s - cum[i]) / (cum[i + 1] - cum[i]);
        return v[i] + (v[(i + 1) % v.size()] - v[i]) * lam;
      };
      const double ds = total / n;
      for (int k = 0; k < n; ++k) {
        const double s = ds * k;
        out.push_back({s, at(s), at(s + ds) - at(s - ds)});
      }
      break;
    }
    case Ignition::Kind::Point:
      break;
  }
  return out;
}

// Uniform grid over segment bounding boxes.
class SegmentHash {
 public:
  struct Ref {
    int traj;  // index into the trajectory vector
    int step;  // segment from path[step] to path[step + 1]
  };

  explicit SegmentHash(double cell) : cell_(cell) {}

  template <class F>
  void for_cells(const Vec2& a, const Vec2& b, F&& f) const {
    const std::int64_t x0 = key_coord(std::min(a.x, b.x));
    const std::int64_t x1 = key_coord(std::max(a.x, b.x));
    const std::int64_t y0 = key_coord(std::min(a.y, b.y));
    const std::int64_t y1 = key_coord(std::max(a.y, b.y));
    for (std::int64_t i = x0; i <= x1; ++i)
      for (std::int64_t j = y0; j <= y1; ++j) f(key(i, j));
  }

  void insert(const Vec2& a, const Vec2& b, Ref ref) {
    for_cells(a, b, [&](std::uint64_t k) { cells_[k].push_back(ref); });
  }

  /// Distinct segments whose cells overlap the bounding box of [a, b].
  std::vector<Ref> query(const Vec2& a, const Vec2& b) const {
    std::vector<Ref> out;
    for_cells(a, b, [&](std::uint64_t k) {
      auto it = cells_.find(k);
      if (it != cells_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    });
    std::sort(out.begin(), out.end(), [](const Ref& l, const Ref& r) {
      return l.traj != r.traj ? l.traj < r.traj : l.step < r.step;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Ref& l, const Ref& r) { return l.traj == r.traj && l.step == r.step; }),
              out.end());
    return out;
  }

 private:
  std::int64_t key_coord(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
  static std::uint64_t key(std::int64_t i, std::int64_t j) {
    return (static_cast<std::uint64_t>(i) << 32) ^ (static_cast<std::uint64_t>(j) & 0xffffffffULL);
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<Ref>> cells_;
};

struct Event {
  double t = 0.0;
  CutKind kind = CutKind::Crossing;
  AerialPoint point;
  std::vector<int> losers;    // trajectory indices cut by this event
  std::vector<int> partners;  // other trajectory indices involved
};

bool equal_times(double a, double b) { return std::fabs(a - b) <= 1e-9 * (1.0 + std::fabs(a)); }

}  // namespace

Ignition Ignition::point(const AerialPoint& p) {
  Ignition ig;
  ig.kind = Kind::Point;
  ig.center = p;
  return ig;
}

Ignition Ignition::circle(const AerialPoint& c, double r) {
  Ignition ig;
  ig.kind = Kind::Circle;
  ig.center = c;
  ig.radius = r;
  return ig;
}

Ignition Ignition::ellipse(const AerialPoint& c, double a, double b, double rotation) {
  Ignition ig;
  ig.kind = Kind::Ellipse;
  ig.center = c;
  ig.semi_major = a;
  ig.semi_minor = b;
  ig.rotation = rotation;
  return ig;
}

Ignition Ignition::polyline(std::vector<AerialPoint> vertices) {
  Ignition ig;
  ig.kind = Kind::Polyline;
  ig.vertices = std::move(vertices);
  return ig;
}

std::string to_string(TrajectoryStatus status) {
  switch (status) {
    case TrajectoryStatus::Live: return "live";
    case TrajectoryStatus::Cut: return "cut";
    case TrajectoryStatus::LeftDomain: return "left-domain";
  }
  return "?";
}

std::string to_string(CutKind kind) { return kind == CutKind::Crossing ? "crossing" : "focal"; }

std::vector<Seed> seed_trajectories(const GeodesicSolver& solver, const Ignition& ignition, int n,
                                    std::vector<std::string>* warnings) {
  if (n < 8) throw Error(ErrorKind::Config, "n must be at least 8");
  std::vector<Seed> seeds;
  seeds.reserve(static_cast<std::size_t>(n));
  if (ignition.kind == Ignition::Kind::Point) {
    const std::vector<Vec2> fan = solver.ignition_fan(0.0, ignition.center, n);
    for (int k = 0; k < n; ++k) {
      seeds.push_back({k, kTwoPi * k / n,
                       {0.0, ignition.center.x, ignition.center.y, fan[k].x, fan[k].y}});
    }
    return seeds;
  }
  const std::vector<CurveSample> samples = sample_curve(ignition, n, warnings);
  for (int k = 0; k < n; ++k) {
    const CurveSample& c = samples[static_cast<std::size_t>(k)];
    Vec2 v;
    try {
      v = solver.initial_velocity(0.0, c.p, c.tangent);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoRoot && e.kind() != ErrorKind::AmbiguousRoot) throw;
      throw Error(ErrorKind::NonConvexMetric,
                  "seed " + std::to_string(k) + " at " + point_text(c.p) + ": " + e.what());
    }
    seeds.push_back({k, c.s, {0.0, c.p.x, c.p.y, v.x, v.y}});
  }
  return seeds;
}

std::vector<AerialPoint> ignition_polygon(const Ignition& ignition, int samples) {
  if (!ignition.is_curve()) return {};
  std::vector<AerialPoint> out;
  if (ignition.kind == Ignition::Kind::Polyline) {
    out = ignition.vertices;
    if (geometry::signed_area(out) < 0.0) std::reverse(out.begin(), out.end());
    return out;
  }
  for (const CurveSample& c : sample_curve(ignition, samples, nullptr)) out.push_back(c.p);
  return out;
}

GeodesicState Trajectory::state_at(double t) const {
  if (path.empty()) throw Error(ErrorKind::EmptyFront, "trajectory has no states");
  if (t <= path.front().t) return path.front();
  if (t >= path.back().t) return path.back();
  auto it = std::upper_bound(path.begin(), path.end(), t,
                             [](double value, const GeodesicState& s) { return value < s.t; });
  const GeodesicState& b = *it;
  const GeodesicState& a = *(it - 1);
  const double lam = (t - a.t) / (b.t - a.t);
  return {t, a.x + lam * (b.x - a.x), a.y + lam * (b.y - a.y), a.vx + lam * (b.vx - a.vx),
          a.vy + lam * (b.vy - a.vy)};
}

std::vector<AerialPoint> FrontSnapshot::polygon() const {
  std::vector<AerialPoint> out;
  out.reserve(vertices.size());
  for (const FrontVertex& v : vertices) out.push_back(v.state.position());
  return out;
}

const Trajectory* FireMap::find(int id) const {
  for (const Trajectory& tr : trajectories)
    if (tr.id == id) return &tr;
  return nullptr;
}

namespace {

class Propagator {
 public:
  Propagator(const GeodesicSolver& solver, const Ignition& ignition, const SolverSettings& settings)
      : solver_(solver),
        ignition_(ignition),
        settings_(settings),
        domain_(solver.metric().terrain().domain()),
        margin_(solver.metric().terrain().boundary_margin()),
        hash_(1.0) {}

  FireMap run() {
    if (!(settings_.dt > 0.0)) throw Error(ErrorKind::Config, "dt must be positive");
    if (!(settings_.t_end > 0.0)) throw Error(ErrorKind::Config, "t_end must be positive");
    if (settings_.output_interval < settings_.dt) {
      throw Error(ErrorKind::Config, "output_interval must be at least dt");
    }
    map_.closed = true;
    map_.dt = settings_.dt;
    const std::vector<Seed> seeds = seed_trajectories(solver_, ignition_, settings_.n, &map_.warnings);
    for (const Seed& s : seeds) {
      if (std::find(settings_.exclude.begin(), settings_.exclude.end(), s.id) != settings_.exclude.end()) continue;
      Trajectory tr;
      tr.id = s.id;
      tr.seed_param = s.seed_param;
      tr.path.push_back(s.state);
      map_.trajectories.push_back(std::move(tr));
    }
    ignition_poly_ = ignition_polygon(ignition_);

    const int steps = static_cast<int>(std::llround(settings_.t_end / settings_.dt));
    const int every = std::max(1, static_cast<int>(std::llround(settings_.output_interval / settings_.dt)));
    every_ = every;

    // Hash cells a few step lengths wide.
    double max_speed = 0.0;
    for (const Trajectory& tr : map_.trajectories) max_speed = std::max(max_speed, norm(tr.path[0].velocity()));
    hash_ = SegmentHash(std::max(4.0 * max_speed * settings_.dt, domain_.scale() * 1e-3));

    snapshot(0);
    for (int k = 0; k < steps; ++k) {
      step(k);
      if ((k + 1) % every == 0 || k + 1 == steps) snapshot(k + 1);
    }
    std::stable_sort(map_.cuts.begin(), map_.cuts.end(),
                     [](const CutRecord& a, const CutRecord& b) { return a.t_cut < b.t_cut; });
    return std::move(map_);
  }

 private:
  double time_of(int step) const { return step * settings_.dt; }

  std::vector<int> live_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < map_.trajectories.size(); ++i)
      if (map_.trajectories[i].live()) out.push_back(static_cast<int>(i));
    return out;
  }

  void advance(const std::vector<int>& live, int k, std::vector<GeodesicState>& next,
               std::vector<char>& left) {
    std::vector<std::exception_ptr> errors(live.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t m = begin; m < end; ++m) {
        const Trajectory& tr = map_.trajectories[static_cast<std::size_t>(live[m])];
        try {
          GeodesicState s = solver_.rk4_step(tr.path.back(), settings_.dt);
          s.t = time_of(k + 1);
          next[m] = s;
          left[m] = !domain_.contains(s.position()) ||
                    domain_.distance_to_boundary(s.position()) < margin_;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::OutOfDomain) {
            left[m] = 1;
          } else {
            errors[m] = std::current_exception();
          }
        } catch (...) {
          errors[m] = std::current_exception();
        }
      }
    };
    const std::size_t threads =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(1, settings_.threads)), live.size());
    if (threads <= 1) {
      work(0, live.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (live.size() + threads - 1) / threads;
      for (std::size_t b = 0; b < live.size(); b += chunk) pool.emplace_back(work, b, std::min(live.size(), b + chunk));
      for (std::thread& th : pool) th.join();
    }
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  void step(int k) {
    const std::vector<int> live = live_indices();
    if (live.empty()) return;
    std::vector<GeodesicState> next(live.size());
    std::vector<char> left(live.size(), 0);
    advance(live, k, next, left);

    std::vector<int> moving;  // trajectories with a new segment this step
    for (std::size_t m = 0; m < live.size(); ++m) {
      Trajectory& tr = map_.trajectories[static_cast<std::size_t>(live[m])];
      if (left[m]) {
        tr.status = TrajectoryStatus::LeftDomain;
        tr.t_end = tr.path.back().t;
        tr.end_point = tr.path.back().position();
        pending_terminated_.push_back(tr.id);
      } else {
        tr.path.push_back(next[m]);
        moving.push_back(live[m]);
      }
    }

    std::vector<Event> events;
    focal_events(moving, k, events);
    crossing_events(moving, k, events);
    burned_events(moving, k, events);
    apply(events);

    if (settings_.loop_excision) excise_loops(k);

    for (int idx : moving) {
      const Trajectory& tr = map_.trajectories[static_cast<std::size_t>(idx)];
      hash_.insert(tr.path[static_cast<std::size_t>(k)].position(),
                   tr.path[static_cast<std::size_t>(k) + 1].position(), {idx, k});
    }
  }

  double focal_epsilon(const std::vector<int>& moving, int k) const {
    if (settings_.focal_epsilon > 0.0) return settings_.focal_epsilon;
    if (moving.size() < 2) return 0.0;
    std::vector<AerialPoint> pts;
    for (int idx : moving) pts.push_back(map_.trajectories[static_cast<std::size_t>(idx)].path[static_cast<std::size_t>(k)].position());
    return 1e-3 * geometry::perimeter(pts, map_.closed) / static_cast<double>(moving.size());
  }

  // Adjacent live trajectories whose separation collapses during the step
  // while decreasing; the trajectory between two collapsing gaps is cut.
  void focal_events(const std::vector<int>& moving, int k, std::vector<Event>& events) const {
    const std::size_t m = moving.size();
    if (m < 3) return;
    const double eps = focal_epsilon(moving, k);
    if (!(eps > 0.0)) return;
    struct Gap {
      bool collapsed = false;
      double tau = 0.0;
    };
    auto pos = [&](int idx, int step) {
      return map_.trajectories[static_cast<std::size_t>(idx)].path[static_cast<std::size_t>(step)].position();
    };
    const std::size_t gaps = map_.closed ? m : m - 1;
    std::vector<Gap> gap(gaps);
    for (std::size_t g = 0; g < gaps; ++g) {
      const int a = moving[g];
      const int b = moving[(g + 1) % m];
      const Vec2 d0 = pos(b, k) - pos(a, k);
      const Vec2 d1 = pos(b, k + 1) - pos(a, k + 1);
      const Vec2 dd = d1 - d0;
      const double dd2 = dot(dd, dd);
      if (!(dot(d0, dd) < 0.0) || dd2 == 0.0) continue;
      const double tau = std::clamp(-dot(d0, dd) / dd2, 0.0, 1.0);
      if (norm(d0 + dd * tau) < eps) gap[g] = {true, tau};
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!map_.closed && (i == 0 || i + 1 == m)) continue;
      const Gap& before = gap[(i + gaps - 1) % gaps];
      const Gap& after = gap[i % gaps];
      if (!before.collapsed || !after.collapsed) continue;
      const double tau = 0.5 * (before.tau + after.tau);
      const int idx = moving[i];
      Event e;
      e.t = time_of(k) + tau * settings_.dt;
      e.kind = CutKind::Focal;
      e.point = pos(idx, k) + (pos(idx, k + 1) - pos(idx, k)) * tau;
      e.losers = {idx};
      e.partners = {moving[(i + m - 1) % m], moving[(i + 1) % m]};
      events.push_back(std::move(e));
    }
  }

  // A trajectory crossing a path that some other trajectory traced earlier
  // is no longer first to arrive there.
  void crossing_events(const std::vector<int>& moving, int k, std::vector<Event>& events) const {
    auto seg = [&](int idx, int step) {
      const Trajectory& tr = map_.trajectories[static_cast<std::size_t>(idx)];
      return std::pair{tr.path[static_cast<std::size_t>(step)].position(),
                       tr.path[static_cast<std::size_t>(step) + 1].position()};
    };
    const double t0 = time_of(k);
    const double dt = settings_.dt;
    for (int i : moving) {
      const auto [p0, p1] = seg(i, k);
      for (const SegmentHash::Ref& ref : hash_.query(p0, p1)) {
        if (ref.traj == i) continue;
        const auto [q0, q1] = seg(ref.traj, ref.step);
        const auto hit = geometry::proper_intersection(p0, p1, q0, q1);
        if (!hit) continue;
        Event e;
        e.t = t0 + hit->s * dt;
        e.point = hit->point;
        e.losers = {i};
        e.partners = {ref.traj};
        events.push_back(std::move(e));
      }
    }
    // New segments against each other: the later arrival loses, both on a tie.
    SegmentHash local(hash_cell());
    for (int i : moving) {
      const auto [p0, p1] = seg(i, k);
      local.insert(p0, p1, {i, k});
    }
    for (int i : moving) {
      const auto [p0, p1] = seg(i, k);
      for (const SegmentHash::Ref& ref : local.query(p0, p1)) {
        if (ref.traj <= i) continue;
        const auto [q0, q1] = seg(ref.traj, k);
        const auto hit = geometry::proper_intersection(p0, p1, q0, q1);
        if (!hit) continue;
        const double ti = t0 + hit->s * dt;
        const double tj = t0 + hit->u * dt;
        Event e;
        e.point = hit->point;
        if (equal_times(ti, tj)) {
          e.t = std::max(ti, tj);
          e.losers = {i, ref.traj};
        } else if (ti > tj) {
          e.t = ti;
          e.losers = {i};
          e.partners = {ref.traj};
        } else {
          e.t = tj;
          e.losers = {ref.traj};
          e.partners = {i};
        }
        events.push_back(std::move(e));
      }
    }
  }

  double hash_cell() const {
    double longest = 0.0;
    for (const Trajectory& tr : map_.trajectories) {
      if (tr.path.size() >= 2) {
        longest = std::max(longest, norm(tr.path.back().position() - tr.path[tr.path.size() - 2].position()));
      }
    }
    return std::max(2.0 * longest, domain_.scale() * 1e-4);
  }

  // New positions strictly inside the ignition region or inside the front
  // of at least one output interval ago.
  void burned_events(const std::vector<int>& moving, int k, std::vector<Event>& events) const {
    const std::vector<AerialPoint>* older = nullptr;
    for (auto it = snapshot_polygons_.rbegin(); it != snapshot_polygons_.rend(); ++it) {
      if (it->first <= k + 1 - every_) {
        older = &it->second;
        break;
      }
    }
    for (int i : moving) {
      const AerialPoint p = map_.trajectories[static_cast<std::size_t>(i)].path[static_cast<std::size_t>(k) + 1].position();
      const bool in_ignition = ignition_poly_.size() >= 3 && geometry::inside_nonzero(ignition_poly_, p);
      const bool in_older = older && older->size() >= 3 && geometry::inside_nonzero(*older, p);
      if (!in_ignition && !in_older) continue;
      Event e;
      e.t = time_of(k + 1);
      e.point = p;
      e.losers = {i};
      events.push_back(std::move(e));
    }
  }

  void apply(std::vector<Event>& events) {
    if (events.empty()) return;
    // Each trajectory takes its earliest event; focal wins ties.
    std::map<int, std::size_t> best;
    for (std::size_t e = 0; e < events.size(); ++e) {
      for (int idx : events[e].losers) {
        auto it = best.find(idx);
        if (it == best.end()) {
          best[idx] = e;
          continue;
        }
        const Event& cur = events[it->second];
        const Event& cand = events[e];
        const bool earlier = cand.t < cur.t && !equal_times(cand.t, cur.t);
        const bool tie = equal_times(cand.t, cur.t);
        if (earlier || (tie && cand.kind == CutKind::Focal && cur.kind != CutKind::Focal) ||
            (tie && cand.kind == cur.kind && cand.partners < cur.partners)) {
          it->second = e;
        }
      }
    }
    std::map<std::size_t, std::vector<int>> used;
    for (const auto& [idx, e] : best) used[e].push_back(idx);
    const auto id_of = [&](int idx) { return map_.trajectories[static_cast<std::size_t>(idx)].id; };
    for (const auto& [e, losers] : used) {
      const Event& ev = events[e];
      CutRecord rec;
      rec.t_cut = ev.t;
      rec.point = ev.point;
      rec.kind = ev.kind;
      for (int idx : losers) {
        Trajectory& tr = map_.trajectories[static_cast<std::size_t>(idx)];
        tr.status = TrajectoryStatus::Cut;
        tr.cut_kind = ev.kind;
        tr.t_end = ev.t;
        tr.end_point = ev.point;
        pending_terminated_.push_back(tr.id);
        rec.ids.push_back(tr.id);
      }
      for (int idx : ev.losers)
        if (std::find(losers.begin(), losers.end(), idx) == losers.end()) rec.ids.push_back(id_of(idx));
      for (int idx : ev.partners) rec.ids.push_back(id_of(idx));
      map_.cuts.push_back(std::move(rec));
    }
  }

  // Non-adjacent front edges that cross enclose a loop; an inverted
  // (clockwise) loop is removed together with the trajectories on it.
  void excise_loops(int k) {
    for (int guard = 0; guard < 64; ++guard) {
      const std::vector<int> live = live_indices();
      const std::size_t m = live.size();
      if (m < 4) return;
      std::vector<AerialPoint> pts;
      for (int idx : live) pts.push_back(map_.trajectories[static_cast<std::size_t>(idx)].path.back().position());
      const std::size_t edges = map_.closed ? m : m - 1;
      std::vector<std::size_t> order(edges);
      for (std::size_t e = 0; e < edges; ++e) order[e] = e;
      auto lo_x = [&](std::size_t e) { return std::min(pts[e].x, pts[(e + 1) % m].x); };
      auto hi_x = [&](std::size_t e) { return std::max(pts[e].x, pts[(e + 1) % m].x); };
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lo_x(a) != lo_x(b) ? lo_x(a) < lo_x(b) : a < b;
      });
      bool found = false;
      std::size_t ea = 0, eb = 0;
      geometry::SegmentHit hit;
      for (std::size_t oi = 0; oi < edges && !found; ++oi) {
        for (std::size_t oj = oi + 1; oj < edges; ++oj) {
          const std::size_t a = order[oi];
          const std::size_t b = order[oj];
          if (lo_x(b) > hi_x(a)) break;
          const std::size_t d = a > b ? a - b : b - a;
          if (d <= 1 || (map_.closed && d == m - 1)) continue;
          auto h = geometry::proper_intersection(pts[a], pts[(a + 1) % m], pts[b], pts[(b + 1) % m]);
          if (!h) continue;
          found = true;
          ea = std::min(a, b);
          eb = std::max(a, b);
          hit = *h;
          if (a > b) std::swap(hit.s, hit.u);
          break;
        }
      }
      if (!found) return;
      // Loop through vertices ea+1 .. eb, or its complement if smaller.
      std::vector<std::size_t> inner, outer;
      for (std::size_t v = ea + 1; v <= eb; ++v) inner.push_back(v);
      for (std::size_t v = eb + 1; v < m + ea + 1; ++v) outer.push_back(v % m);
      const std::vector<std::size_t>& loop =
          (!map_.closed || inner.size() <= outer.size()) ? inner : outer;
      std::vector<AerialPoint> poly{hit.point};
      for (std::size_t v : loop) poly.push_back(pts[v]);
      if (geometry::signed_area(poly) >= 0.0) return;
      CutRecord rec;
      rec.t_cut = time_of(k + 1);
      rec.point = hit.point;
      rec.kind = CutKind::Crossing;
      for (std::size_t v : loop) {
        Trajectory& tr = map_.trajectories[static_cast<std::size_t>(live[v])];
        tr.status = TrajectoryStatus::Cut;
        tr.cut_kind = CutKind::Crossing;
        tr.t_end = rec.t_cut;
        tr.end_point = tr.path.back().position();
        pending_terminated_.push_back(tr.id);
        rec.ids.push_back(tr.id);
      }
      map_.cuts.push_back(std::move(rec));
    }
  }

  void snapshot(int step) {
    FrontSnapshot snap;
    snap.t = time_of(step);
    snap.step = step;
    snap.closed = map_.closed;
    const std::vector<int> live = live_indices();
    for (std::size_t m = 0; m < live.size(); ++m) {
      const Trajectory& tr = map_.trajectories[static_cast<std::size_t>(live[m])];
      FrontVertex v;
      v.id = tr.id;
      v.state = tr.path.back();
      const bool last = m + 1 == live.size();
      if (!last) {
        v.bridge_to_next = live[m + 1] != live[m] + 1;
      } else if (map_.closed && live.size() > 1) {
        v.bridge_to_next = !(live[m] + 1 == static_cast<int>(map_.trajectories.size()) && live[0] == 0);
      }
      snap.vertices.push_back(v);
    }
    std::sort(pending_terminated_.begin(), pending_terminated_.end());
    snap.terminated = pending_terminated_;
    pending_terminated_.clear();
    const std::vector<AerialPoint> poly = snap.polygon();
    snap.area = std::fabs(geometry::signed_area(poly));
    snapshot_polygons_.emplace_back(step, poly);
    map_.fronts.push_back(std::move(snap));
  }

  const GeodesicSolver& solver_;
  const Ignition& ignition_;
  const SolverSettings& settings_;
  Domain domain_;
  double margin_;
  SegmentHash hash_;
  int every_ = 1;
  FireMap map_;
  std::vector<AerialPoint> ignition_poly_;
  std::vector<std::pair<int, std::vector<AerialPoint>>> snapshot_polygons_;
  std::vector<int> pending_terminated_;
};

}  // namespace

FireMap propagate(const GeodesicSolver& solver, const Ignition& ignition, const SolverSettings& settings) {
  return Propagator(solver, ignition, settings).run();
}

FrontSnapshot front_polygon(const FireMap& map, double t, std::vector<std::string>* warnings) {
  FrontSnapshot snap;
  snap.t = t;
  snap.closed = map.closed;
  snap.step = map.dt > 0.0 ? static_cast<int>(std::llround(t / map.dt)) : 0;
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < map.trajectories.size(); ++i) {
    const Trajectory& tr = map.trajectories[i];
    if (tr.path.empty() || tr.path.back().t < t) continue;
    if (!tr.live() && tr.t_end <= t) continue;
    live.push_back(i);
  }
  if (live.empty()) {
    std::ostringstream msg;
    msg << "no live trajectories at t=" << t;
    throw Error(ErrorKind::EmptyFront, msg.str());
  }
  if (live.size() == 1 && warnings) warnings->push_back("front reduced to a single trajectory");
  for (std::size_t m = 0; m < live.size(); ++m) {
    FrontVertex v;
    v.id = map.trajectories[live[m]].id;
    v.state = map.trajectories[live[m]].state_at(t);
    if (m + 1 < live.size()) {
      v.bridge_to_next = live[m + 1] != live[m] + 1;
    } else if (map.closed && live.size() > 1) {
      v.bridge_to_next = !(live[m] + 1 == map.trajectories.size() && live[0] == 0);
    }
    snap.vertices.push_back(v);
  }
  snap.area = std::fabs(geometry::signed_area(snap.polygon()));
  return snap;
}

}  // namespace firefront
