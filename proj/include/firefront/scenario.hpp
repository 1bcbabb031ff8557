#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "firefront/fields.hpp"
#include "firefront/front.hpp"
#include "firefront/terrain.hpp"

namespace firefront {

struct OracleSettings {
  int nx = 400;
  int ny = 400;
  int radius = 3;
};

struct IndicatrixSettings {
  int nx = 7;
  int ny = 7;
  double t = 0.0;
  /// Display scale applied to indicatrix polygons.
  double scale = 0.0;  ///< 0 picks a scale that avoids overlaps
  bool overlay = false;
};

/// A complete run description, built from a config file.
struct Scenario {
  std::string name;
  Terrain terrain = Terrain::plane(0.0, 0.0, Domain{});
  EnvironmentFields fields;
  Ignition ignition;
  SolverSettings solver;
  bool renormalize = true;
  OracleSettings oracle;
  IndicatrixSettings indicatrix;
  bool contours = false;
};

/// Sections of `key = value` lines. Keys may repeat; values keep their
/// source line for error messages.
struct ConfigFile {
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
  };
  std::map<std::string, std::vector<Entry>> sections;

  static ConfigFile parse(const std::string& text);
};

/// Throws Error(Config) with a message that starts with "section.key:".
Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir = {});
Scenario load_scenario(const std::filesystem::path& path);

/// A number literal or a constant expression such as "pi/4" or "sqrt(3)".
double parse_constant(const std::string& text);

}  // namespace firefront
