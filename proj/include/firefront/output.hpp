#pragma once

#include <iosfwd>
#include <string>

#include "firefront/front.hpp"
#include "firefront/metric.hpp"
#include "firefront/scenario.hpp"

namespace firefront {

/// Nine significant digits, the precision of every CSV column.
std::string format_number(double v);

/// t, trajectory_id, seed_param, x, y, z, vx, vy, status. Each snapshot
/// lists its live vertices in front order, then the trajectories that
/// terminated since the previous snapshot at their terminal state.
void write_fronts_csv(std::ostream& out, const FireMap& map, const Terrain& terrain);
/// t_cut, x, y, kind, ids (semicolon-joined).
void write_cuts_csv(std::ostream& out, const FireMap& map);
/// Every solver step of every trajectory up to its terminal time.
void write_trajectories_csv(std::ostream& out, const FireMap& map, const Terrain& terrain);

/// Fronts coloured by time, trajectory paths, cut markers and dashed bridge
/// edges; optional elevation contours.
void write_fronts_svg(std::ostream& out, const FireMap& map, const Terrain& terrain, bool contours);
/// Indicatrix polygons (256 vertices) on a lattice of the domain.
void write_indicatrix_svg(std::ostream& out, const FireMetric& metric, const IndicatrixSettings& settings,
                          bool contours);

}  // namespace firefront
