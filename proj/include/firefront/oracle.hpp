#pragma once

#include <iosfwd>
#include <limits>
#include <vector>

#include "firefront/front.hpp"
#include "firefront/metric.hpp"
#include "firefront/terrain.hpp"

namespace firefront {

/// First-arrival times on a regular node lattice covering a domain.
struct ArrivalGrid {
  double xmin = 0.0;
  double ymin = 0.0;
  double dx = 1.0;
  double dy = 1.0;
  int nx = 0;
  int ny = 0;
  std::vector<double> time;  ///< row-major from the south-west node; +inf if unreached

  double at(int i, int j) const { return time[static_cast<std::size_t>(j) * nx + i]; }
  AerialPoint node(int i, int j) const { return {xmin + i * dx, ymin + j * dy}; }
  /// Bilinear interpolation; +inf outside the lattice or next to an
  /// unreached node.
  double sample(const AerialPoint& p) const;
  /// DEM text format with one cell per node; unreached nodes are written
  /// as -1. Requires dx == dy.
  void write(std::ostream& out) const;
};

/// Co-prime integer offsets (i, j) with max(|i|, |j|) <= r: 16 for r = 2,
/// 32 for r = 3.
std::vector<std::pair<int, int>> stencil_offsets(int radius);

struct OracleSpec {
  Domain domain;
  int nx = 400;
  int ny = 400;
  int radius = 3;
  /// Fields are sampled at 0, t_end/2 and t_end to confirm they are static.
  double t_end = 1.0;
};

/// Throws TimeDependentMetric if any field changes between the sampled times.
void require_time_independent(const FireMetric& metric, const Domain& domain, double t_end);

/// Label-setting Dijkstra over the stencil with edge cost F_mid(q - p) at
/// t = 0.
ArrivalGrid grid_arrival(const FireMetric& metric, const Ignition& ignition, const OracleSpec& spec);

struct FrontComparison {
  double median = 0.0;
  double p95 = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

/// |arrival(vertex) - t| / t over the front vertices.
FrontComparison compare_front(const ArrivalGrid& arrival, const FrontSnapshot& front);

}  // namespace firefront
