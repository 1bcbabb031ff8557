#pragma once

#include <optional>
#include <string>
#include <vector>

#include "firefront/geodesic.hpp"
#include "firefront/vec.hpp"

namespace firefront {

/// Initial burned set B0: a point, or a closed curve bounding it.
struct Ignition {
  enum class Kind { Point, Circle, Ellipse, Polyline };

  Kind kind = Kind::Point;
  AerialPoint center;
  double radius = 0.0;       ///< circle
  double semi_major = 0.0;   ///< ellipse, along the rotated x axis
  double semi_minor = 0.0;   ///< ellipse, along the rotated y axis
  double rotation = 0.0;     ///< ellipse
  std::vector<AerialPoint> vertices;  ///< closed polyline, last vertex not repeated

  static Ignition point(const AerialPoint& p);
  static Ignition circle(const AerialPoint& c, double r);
  static Ignition ellipse(const AerialPoint& c, double a, double b, double rotation);
  static Ignition polyline(std::vector<AerialPoint> vertices);

  bool is_curve() const { return kind != Kind::Point; }
};

struct Seed {
  int id = 0;
  double seed_param = 0.0;  ///< heading for point fires, curve parameter otherwise
  GeodesicState state;
};

/// Initial states: the indicatrix fan for a point fire, otherwise n curve
/// samples with outward F-orthogonal unit velocities. Clockwise polylines
/// are reversed, with a note appended to `warnings`.
std::vector<Seed> seed_trajectories(const GeodesicSolver& solver, const Ignition& ignition,
                                    int n, std::vector<std::string>* warnings = nullptr);

/// The ignition boundary as a counter-clockwise polygon (empty for a point).
std::vector<AerialPoint> ignition_polygon(const Ignition& ignition, int samples = 256);

enum class TrajectoryStatus { Live, Cut, LeftDomain };
enum class CutKind { Crossing, Focal };

std::string to_string(TrajectoryStatus status);
std::string to_string(CutKind kind);

struct CutRecord {
  double t_cut = 0.0;
  AerialPoint point;
  CutKind kind = CutKind::Crossing;
  /// Trajectories involved; the cut ones come first.
  std::vector<int> ids;
};

struct Trajectory {
  int id = 0;
  double seed_param = 0.0;
  /// One state per solver step, path[k].t == k * dt, up to the step that
  /// ended the trajectory.
  std::vector<GeodesicState> path;
  TrajectoryStatus status = TrajectoryStatus::Live;
  std::optional<CutKind> cut_kind;
  /// Time and place where the trajectory stopped being live.
  double t_end = 0.0;
  AerialPoint end_point;

  bool live() const { return status == TrajectoryStatus::Live; }
  /// Interpolated state at time t <= path.back().t.
  GeodesicState state_at(double t) const;
};

struct FrontVertex {
  int id = 0;
  GeodesicState state;
  /// The edge to the next vertex skips terminated trajectories.
  bool bridge_to_next = false;
};

struct FrontSnapshot {
  double t = 0.0;
  int step = 0;
  std::vector<FrontVertex> vertices;
  bool closed = true;
  /// Trajectories that stopped being live since the previous snapshot.
  std::vector<int> terminated;
  double area = 0.0;

  std::vector<AerialPoint> polygon() const;
};

struct SolverSettings {
  int n = 64;
  double dt = 1e-2;
  double t_end = 1.0;
  double output_interval = 1.0;
  /// 0 selects 1e-3 times the current mean spacing of adjacent live
  /// trajectories.
  double focal_epsilon = 0.0;
  bool loop_excision = true;
  /// Trajectory ids removed from the computation; other ids are unchanged.
  std::vector<int> exclude;
  int threads = 1;
};

struct FireMap {
  bool closed = true;
  /// False when the run was forced through a failed convexity audit; such
  /// trajectories need not be time-minimizing.
  bool minimizing = true;
  double dt = 0.0;
  std::vector<Trajectory> trajectories;  ///< in seed order
  std::vector<FrontSnapshot> fronts;     ///< at output times
  std::vector<CutRecord> cuts;           ///< in time order
  std::vector<std::string> warnings;

  const Trajectory* find(int id) const;
};

/// Lockstep RK4 integration of every seed with crossing and focal pruning
/// after each step. Deterministic for a given input and thread count.
FireMap propagate(const GeodesicSolver& solver, const Ignition& ignition,
                  const SolverSettings& settings);

/// Live trajectory positions at time t in seed order. Throws EmptyFront when
/// nothing is live; a single live trajectory yields a one-point polyline and
/// a warning.
FrontSnapshot front_polygon(const FireMap& map, double t, std::vector<std::string>* warnings = nullptr);

}  // namespace firefront
