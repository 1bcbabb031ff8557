#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "firefront/metric.hpp"

namespace firefront {

struct AuditFailure {
  double t = 0.0;
  AerialPoint p;
  double min_eigenvalue = 0.0;
  /// Contiguous heading intervals where the fundamental tensor is not
  /// positive definite.
  std::vector<std::pair<double, double>> theta_ranges;
};

struct ConvexityAudit {
  bool pass = true;
  int points = 0;
  double worst_eigenvalue = 0.0;  ///< smallest fundamental tensor eigenvalue seen
  double worst_t = 0.0;
  AerialPoint worst_p;
  /// Smallest (a + h')/h' - 2 sin(slant) over wind-free samples, if any.
  std::optional<double> worst_slope_margin;
  /// Largest |cos^2 + sin^2 - 1| of the aerial-to-surface wind conversion.
  double wind_normalization_defect = 0.0;
  std::vector<AuditFailure> failures;
};

/// Samples an n x n lattice of the domain at t = 0, t_end/2 and t_end and
/// scans n_dirs headings at each sample. lattice = 0 picks n from the
/// terrain: at least 9, with spacing at most half the feature scale, capped
/// at 161.
ConvexityAudit audit_convexity(const FireMetric& metric, double t_end, int lattice = 0, int n_dirs = 128);

/// The lattice size audit_convexity uses for lattice = 0.
int default_audit_lattice(const Terrain& terrain);

/// Human-readable summary, one line per failing sample (at most max_lines).
std::string describe(const ConvexityAudit& audit, std::size_t max_lines = 10);

}  // namespace firefront
