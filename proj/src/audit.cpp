#include "firefront/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "firefront/error.hpp"

namespace firefront {

namespace {

std::vector<std::pair<double, double>> ranges(const std::vector<double>& thetas, double step) {
  std::vector<std::pair<double, double>> out;
  for (double th : thetas) {
    if (!out.empty() && th - out.back().second <= 1.5 * step) {
      out.back().second = th;
    } else {
      out.emplace_back(th, th);
    }
  }
  // Merge an interval wrapping through theta = 0.
  if (out.size() > 1 && out.front().first < 0.5 * step &&
      out.back().second > 2.0 * std::numbers::pi - 1.5 * step) {
    out.front().first = out.back().first - 2.0 * std::numbers::pi;
    out.pop_back();
  }
  return out;
}

}  // namespace

int default_audit_lattice(const Terrain& terrain) {
  const double spacing = 0.5 * terrain.feature_scale();
  const double n = std::ceil(terrain.domain().scale() / spacing) + 1;
  return static_cast<int>(std::clamp(std::isfinite(n) ? n : 0.0, 9.0, 161.0));
}

ConvexityAudit audit_convexity(const FireMetric& metric, double t_end, int lattice, int n_dirs) {
  if (lattice <= 0) lattice = default_audit_lattice(metric.terrain());
  ConvexityAudit audit;
  const Domain& d = metric.terrain().domain();
  const double times[] = {0.0, 0.5 * t_end, t_end};
  bool first = true;
  for (double t : times) {
    for (int j = 0; j < lattice; ++j) {
      for (int i = 0; i < lattice; ++i) {
        const AerialPoint p{d.xmin + d.width() * (i + 0.5) / lattice, d.ymin + d.height() * (j + 0.5) / lattice};
        ++audit.points;
        const ConvexityScan scan = metric.convexity_scan_numeric(t, p, n_dirs);
        if (first || scan.min_eigenvalue < audit.worst_eigenvalue) {
          audit.worst_eigenvalue = scan.min_eigenvalue;
          audit.worst_t = t;
          audit.worst_p = p;
          first = false;
        }
        if (!scan.pass) {
          audit.pass = false;
          audit.failures.push_back(
              {t, p, scan.min_eigenvalue, ranges(scan.failing_thetas, 2.0 * std::numbers::pi / n_dirs)});
        }
        try {
          const SlopeConvexity sc = metric.convexity_check_slope(t, p);
          if (!audit.worst_slope_margin || sc.margin < *audit.worst_slope_margin) audit.worst_slope_margin = sc.margin;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotApplicable) throw;
        }
        if (metric.fields().wind_frame == AngleFrame::Aerial) {
          const auto [c, s] = wind_angle_to_surface(metric.terrain(), p, metric.fields().wind_angle.eval(t, p));
          audit.wind_normalization_defect = std::max(audit.wind_normalization_defect, std::fabs(c * c + s * s - 1.0));
        }
      }
    }
  }
  return audit;
}

std::string describe(const ConvexityAudit& audit, std::size_t max_lines) {
  std::ostringstream out;
  if (audit.pass) {
    out << "strongly convex at all " << audit.points << " samples\n";
  } else {
    out << "NOT strongly convex at " << audit.failures.size() << " of " << audit.points << " samples\n";
  }
  out << "smallest tensor eigenvalue " << audit.worst_eigenvalue << " at t=" << audit.worst_t << ", ("
      << audit.worst_p.x << ", " << audit.worst_p.y << ")\n";
  if (audit.worst_slope_margin) out << "smallest slope margin (a+h')/h' - 2 sin(slant): " << *audit.worst_slope_margin << " (sharp only when h' = h)\n";
  if (audit.wind_normalization_defect > 1e-3) {
    out << "warning: aerial wind conversion gives cos^2+sin^2 off by " << audit.wind_normalization_defect << "\n";
  }
  for (std::size_t k = 0; k < audit.failures.size() && k < max_lines; ++k) {
    const AuditFailure& f = audit.failures[k];
    out << "  fail t=" << f.t << " (" << f.p.x << ", " << f.p.y << ") eigenvalue " << f.min_eigenvalue << " theta in";
    for (const auto& [a, b] : f.theta_ranges) out << " [" << a << ", " << b << "]";
    out << "\n";
  }
  if (audit.failures.size() > max_lines) out << "  ... " << audit.failures.size() - max_lines << " more\n";
  return out.str();
}

}  // namespace firefront
