#pragma once

#include <cmath>
#include <random>
#include <string>

#include "firefront/metric.hpp"
#include "firefront/terrain.hpp"

namespace testing {

inline firefront::Domain square(double half) { return {-half, half, -half, half}; }

inline std::string source_path(const std::string& rel) { return std::string(FIREFRONT_SOURCE_DIR) + "/" + rel; }

inline firefront::Terrain flat(double half = 10.0) { return firefront::Terrain::plane(0.0, 0.0, square(half)); }

inline firefront::Terrain hill(double amplitude = 3.0, double half = 10.0) {
  return firefront::Terrain::gaussian({{amplitude, 0.0, 0.0, 1.0, 1.0}}, square(half));
}

inline firefront::EnvironmentFields fields(double a, double h, double eps = 0.0, double wind = 0.0) {
  firefront::EnvironmentFields f;
  f.a = a;
  f.h = h;
  f.eps = eps;
  f.wind_angle = wind;
  f.wind_frame = firefront::AngleFrame::Surface;
  return f;
}

inline double rel_err(double got, double want) { return std::fabs(got - want) / std::max(std::fabs(want), 1e-300); }

}  // namespace testing
