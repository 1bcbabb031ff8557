#include "firefront/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "firefront/error.hpp"
#include "firefront/expression.hpp"

namespace firefront {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Strips a trailing comment that is not inside quotes.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Config, where + ": " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Reads one section, tracking which keys were consumed so that leftovers
// can be reported as unknown.
class Section {
 public:
  Section(std::string name, const std::vector<ConfigFile::Entry>* entries)
      : name_(std::move(name)), entries_(entries) {}

  bool present() const { return entries_ != nullptr; }
  std::string where(const std::string& key) const { return name_ + "." + key; }

  const ConfigFile::Entry* find(const std::string& key) {
    used_.insert(key);
    if (!entries_) return nullptr;
    const ConfigFile::Entry* hit = nullptr;
    for (const auto& e : *entries_) {
      if (e.key != key) continue;
      if (hit) fail(where(key), "given more than once (line " + std::to_string(e.line) + ")");
      hit = &e;
    }
    return hit;
  }

  std::vector<const ConfigFile::Entry*> all(const std::string& key) {
    used_.insert(key);
    std::vector<const ConfigFile::Entry*> out;
    if (entries_)
      for (const auto& e : *entries_)
        if (e.key == key) out.push_back(&e);
    return out;
  }

  std::string text(const std::string& key) {
    const auto* e = find(key);
    if (!e) fail(where(key), "required");
    return unquote(e->value);
  }

  double number(const std::string& key) { return to_number(key, text(key)); }
  double number(const std::string& key, double fallback) {
    const auto* e = find(key);
    return e ? to_number(key, unquote(e->value)) : fallback;
  }

  int integer(const std::string& key, int fallback) {
    const auto* e = find(key);
    if (!e) return fallback;
    const double v = to_number(key, unquote(e->value));
    if (v != std::floor(v) || std::fabs(v) > 1e9) fail(where(key), "expected an integer");
    return static_cast<int>(v);
  }

  bool boolean(const std::string& key, bool fallback) {
    const auto* e = find(key);
    if (!e) return fallback;
    const std::string v = lower(unquote(e->value));
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    fail(where(key), "expected true or false, got '" + e->value + "'");
  }

  std::vector<double> numbers(const std::string& key, std::size_t count) {
    return list(key, text(key), count);
  }

  std::vector<double> list(const std::string& key, const std::string& value, std::size_t count) {
    std::vector<double> out;
    for (const std::string& part : split(value, ',')) out.push_back(to_number(key, part));
    if (count && out.size() != count) {
      fail(where(key), "expected " + std::to_string(count) + " comma-separated values");
    }
    return out;
  }

  ScalarField field(const std::string& key) {
    const std::string v = text(key);
    try {
      return ScalarField::parse(v);
    } catch (const Error& e) {
      fail(where(key), e.what());
    }
  }

  void check_unused() const {
    if (!entries_) return;
    for (const auto& e : *entries_) {
      if (!used_.count(e.key)) fail(where(e.key), "unknown key (line " + std::to_string(e.line) + ")");
    }
  }

 private:
  double to_number(const std::string& key, const std::string& v) {
    try {
      return parse_constant(v);
    } catch (const Error& e) {
      fail(where(key), e.what());
    }
  }

  std::string name_;
  const std::vector<ConfigFile::Entry>* entries_;
  std::set<std::string> used_;
};

const std::set<std::string> kSections = {"scenario", "domain", "terrain", "fields",  "wind",
                                         "ignition", "solver", "oracle",  "indicatrix", "output"};

std::vector<AerialPoint> read_polyline(const std::filesystem::path& path, const std::string& where) {
  std::ifstream in(path);
  if (!in) fail(where, "cannot open polyline file " + path.string());
  std::vector<AerialPoint> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    AerialPoint p;
    if (!(ls >> p.x >> p.y)) {
      fail(where, path.string() + " line " + std::to_string(lineno) + ": expected 'x y'");
    }
    out.push_back(p);
  }
  if (out.size() >= 2 && out.front().x == out.back().x && out.front().y == out.back().y) out.pop_back();
  return out;
}

}  // namespace

double parse_constant(const std::string& raw) {
  const std::string text = trim(unquote(trim(raw)));
  const std::string l = lower(text);
  if (l == "inf" || l == "+inf") return std::numeric_limits<double>::infinity();
  if (l == "-inf") return -std::numeric_limits<double>::infinity();
  if (text.empty()) throw Error(ErrorKind::Config, "empty value");
  const Expression e = Expression::parse(text);
  for (char v : {'t', 'x', 'y'}) {
    if (e.uses_variable(v)) throw Error(ErrorKind::Config, "'" + text + "' must be a constant");
  }
  return e.eval(0.0, 0.0, 0.0);
}

ConfigFile ConfigFile::parse(const std::string& text) {
  ConfigFile cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("line " + std::to_string(lineno), "unterminated section header");
      section = lower(trim(line.substr(1, line.size() - 2)));
      if (!kSections.count(section)) fail(section, "unknown section (line " + std::to_string(lineno) + ")");
      cfg.sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("line " + std::to_string(lineno), "expected 'key = value'");
    if (section.empty()) fail("line " + std::to_string(lineno), "key outside of a section");
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(section, "empty key (line " + std::to_string(lineno) + ")");
    if (value.empty()) fail(section + "." + key, "empty value (line " + std::to_string(lineno) + ")");
    cfg.sections[section].push_back({key, value, lineno});
  }
  return cfg;
}

Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir) {
  const ConfigFile cfg = ConfigFile::parse(text);
  auto section = [&](const std::string& name) {
    auto it = cfg.sections.find(name);
    return Section(name, it == cfg.sections.end() ? nullptr : &it->second);
  };
  Scenario sc;

  Section meta = section("scenario");
  if (meta.find("name")) sc.name = meta.text("name");
  meta.check_unused();

  Section terrain = section("terrain");
  if (!terrain.present()) fail("terrain", "required");
  const std::string kind = lower(terrain.text("kind"));
  Section dom = section("domain");
  Domain domain;
  if (dom.present()) {
    domain.xmin = dom.number("xmin");
    domain.xmax = dom.number("xmax");
    domain.ymin = dom.number("ymin");
    domain.ymax = dom.number("ymax");
    if (!(domain.xmax > domain.xmin)) fail("domain.xmax", "must exceed xmin");
    if (!(domain.ymax > domain.ymin)) fail("domain.ymax", "must exceed ymin");
  }
  if (kind == "plane") {
    sc.terrain = Terrain::plane(terrain.number("gx", 0.0), terrain.number("gy", 0.0), domain,
                                terrain.number("z0", 0.0));
  } else if (kind == "gaussian") {
    std::vector<GaussianBump> bumps;
    for (const auto* e : terrain.all("bump")) {
      const auto v = terrain.list("bump", unquote(e->value), 5);
      if (!(v[3] > 0.0) || !(v[4] > 0.0)) fail(terrain.where("bump"), "widths must be positive");
      bumps.push_back({v[0], v[1], v[2], v[3], v[4]});
    }
    if (bumps.empty()) fail(terrain.where("bump"), "required");
    sc.terrain = Terrain::gaussian(std::move(bumps), domain, terrain.number("base", 0.0));
  } else if (kind == "dem") {
    if (dom.present()) fail("domain", "not allowed with a dem terrain; the grid extent is used");
    const std::filesystem::path file = base_dir / terrain.text("file");
    try {
      sc.terrain = Terrain::grid(GridDem::load(file.string()));
    } catch (const Error& e) {
      fail(terrain.where("file"), e.what());
    }
  } else {
    fail(terrain.where("kind"), "expected plane, gaussian or dem, got '" + kind + "'");
  }
  terrain.check_unused();
  dom.check_unused();

  Section fields = section("fields");
  if (!fields.present()) fail("fields", "required");
  sc.fields.a = fields.field("a");
  sc.fields.h = fields.field("h");
  if (fields.find("h_prime")) sc.fields.h_prime = fields.field("h_prime");
  sc.fields.eps = fields.find("eps") ? fields.field("eps") : ScalarField(0.0);
  fields.check_unused();

  Section wind = section("wind");
  sc.fields.wind_angle = wind.find("angle") ? wind.field("angle") : ScalarField(0.0);
  if (wind.find("angle_frame")) {
    const std::string frame = lower(wind.text("angle_frame"));
    if (frame == "surface") {
      sc.fields.wind_frame = AngleFrame::Surface;
    } else if (frame == "aerial") {
      sc.fields.wind_frame = AngleFrame::Aerial;
    } else {
      fail(wind.where("angle_frame"), "expected surface or aerial, got '" + frame + "'");
    }
  }
  wind.check_unused();

  Section ig = section("ignition");
  if (!ig.present()) fail("ignition", "required");
  const std::string ikind = lower(ig.text("kind"));
  if (ikind == "point") {
    const auto c = ig.numbers("center", 2);
    sc.ignition = Ignition::point({c[0], c[1]});
  } else if (ikind == "circle") {
    const auto c = ig.numbers("center", 2);
    const double r = ig.number("radius");
    if (!(r > 0.0)) fail(ig.where("radius"), "must be positive");
    sc.ignition = Ignition::circle({c[0], c[1]}, r);
  } else if (ikind == "ellipse") {
    const auto c = ig.numbers("center", 2);
    const auto ax = ig.numbers("semi_axes", 2);
    if (!(ax[0] > 0.0) || !(ax[1] > 0.0)) fail(ig.where("semi_axes"), "must be positive");
    sc.ignition = Ignition::ellipse({c[0], c[1]}, ax[0], ax[1], ig.number("rotation", 0.0));
  } else if (ikind == "polyline") {
    std::vector<AerialPoint> pts;
    if (ig.find("file")) {
      pts = read_polyline(base_dir / ig.text("file"), ig.where("file"));
    } else {
      for (const std::string& pair : split(ig.text("vertices"), ';')) {
        const auto v = ig.list("vertices", pair, 2);
        pts.push_back({v[0], v[1]});
      }
    }
    if (pts.size() < 3) fail(ig.where("vertices"), "a polyline needs at least 3 vertices");
    sc.ignition = Ignition::polyline(std::move(pts));
  } else {
    fail(ig.where("kind"), "expected point, circle, ellipse or polyline, got '" + ikind + "'");
  }
  ig.check_unused();
  const Domain& d = sc.terrain.domain();
  const std::vector<AerialPoint> outline =
      sc.ignition.is_curve() ? ignition_polygon(sc.ignition, 64) : std::vector<AerialPoint>{sc.ignition.center};
  for (const AerialPoint& p : outline) {
    if (!d.contains(p)) fail("ignition", "lies outside the domain");
  }

  Section solver = section("solver");
  sc.solver.n = solver.integer("n", 64);
  sc.solver.dt = solver.number("dt", 1e-2);
  sc.solver.t_end = solver.number("t_end", 1.0);
  sc.solver.output_interval = solver.number("output_interval", sc.solver.t_end);
  sc.renormalize = solver.boolean("renormalize", true);
  sc.solver.focal_epsilon = solver.number("focal_epsilon", 0.0);
  sc.solver.loop_excision = solver.boolean("loop_excision", true);
  sc.solver.threads = solver.integer("threads", 1);
  if (solver.find("exclude")) {
    for (double v : solver.list("exclude", solver.text("exclude"), 0)) sc.solver.exclude.push_back(static_cast<int>(v));
  }
  if (sc.solver.n < 8) fail(solver.where("n"), "must be at least 8");
  if (!(sc.solver.dt > 0.0)) fail(solver.where("dt"), "must be positive");
  if (!(sc.solver.t_end > 0.0)) fail(solver.where("t_end"), "must be positive");
  if (sc.solver.output_interval < sc.solver.dt) fail(solver.where("output_interval"), "must be at least dt");
  if (sc.solver.focal_epsilon < 0.0) fail(solver.where("focal_epsilon"), "must be non-negative");
  solver.check_unused();

  Section oracle = section("oracle");
  sc.oracle.nx = oracle.integer("nx", 400);
  sc.oracle.ny = oracle.integer("ny", sc.oracle.nx);
  sc.oracle.radius = oracle.integer("radius", 3);
  if (sc.oracle.nx < 2 || sc.oracle.ny < 2) fail(oracle.where("nx"), "must be at least 2");
  if (sc.oracle.radius != 2 && sc.oracle.radius != 3) fail(oracle.where("radius"), "must be 2 or 3");
  oracle.check_unused();

  Section ind = section("indicatrix");
  sc.indicatrix.nx = ind.integer("nx", 7);
  sc.indicatrix.ny = ind.integer("ny", sc.indicatrix.nx);
  sc.indicatrix.t = ind.number("t", 0.0);
  sc.indicatrix.scale = ind.number("scale", 0.0);
  sc.indicatrix.overlay = ind.boolean("overlay", false);
  if (sc.indicatrix.nx < 1 || sc.indicatrix.ny < 1) fail(ind.where("nx"), "must be positive");
  ind.check_unused();

  Section out = section("output");
  sc.contours = out.boolean("contours", false);
  out.check_unused();
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, path.string() + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  Scenario sc = parse_scenario(text.str(), path.parent_path());
  if (sc.name.empty()) sc.name = path.stem().string();
  return sc;
}

}  // namespace firefront
