// Command-line front end: run, indicatrix, check and oracle.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "firefront/audit.hpp"
#include "firefront/error.hpp"
#include "firefront/oracle.hpp"
#include "firefront/output.hpp"
#include "firefront/scenario.hpp"

namespace fs = std::filesystem;
using namespace firefront;

namespace {

enum Exit : int { kOk = 0, kConvexity = 2, kConfig = 3, kNumerical = 4 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config:
    case ErrorKind::Parse:
    case ErrorKind::TimeDependentMetric:
      return kConfig;
    case ErrorKind::NonConvexMetric:
    case ErrorKind::NoRoot:
    case ErrorKind::AmbiguousRoot:
    case ErrorKind::SingularTensor:
      return kConvexity;
    default:
      return kNumerical;
  }
}

struct Options {
  std::string config;
  std::string out = "out";
  int threads = 1;
  bool allow_nonconvex = false;
  bool no_renormalize = false;
  std::optional<double> dt;
  std::optional<int> n;
};

Scenario load(const Options& o) {
  Scenario sc = load_scenario(o.config);
  if (o.dt) {
    if (!(*o.dt > 0.0)) throw Error(ErrorKind::Config, "--dt: must be positive");
    sc.solver.dt = *o.dt;
    if (sc.solver.output_interval < sc.solver.dt) throw Error(ErrorKind::Config, "--dt: exceeds solver.output_interval");
  }
  if (o.n) {
    if (*o.n < 8) throw Error(ErrorKind::Config, "--n: must be at least 8");
    sc.solver.n = *o.n;
  }
  if (o.no_renormalize) sc.renormalize = false;
  sc.solver.threads = std::max(1, o.threads);
  return sc;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Config, "--out: cannot write " + path.string());
  return out;
}

int cmd_run(const Options& o) {
  const Scenario sc = load(o);
  const FireMetric metric(sc.terrain, sc.fields);
  const ConvexityAudit audit = audit_convexity(metric, sc.solver.t_end);
  if (!audit.pass) {
    std::cerr << describe(audit);
    if (!o.allow_nonconvex) {
      std::cerr << "aborting: metric is not strongly convex (use --allow-nonconvex to run anyway)\n";
      return kConvexity;
    }
    std::cerr << "WARNING: running on a non-convex metric; results are labeled non-minimizing\n";
  }
  GeodesicOptions gopt;
  gopt.renormalize = sc.renormalize;
  const GeodesicSolver solver(metric, gopt);
  const auto start = std::chrono::steady_clock::now();
  FireMap map = propagate(solver, sc.ignition, sc.solver);
  map.minimizing = audit.pass;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const std::string& w : map.warnings) std::cerr << "warning: " << w << "\n";

  fs::create_directories(o.out);
  auto fronts = open_output(fs::path(o.out) / "fronts.csv");
  write_fronts_csv(fronts, map, sc.terrain);
  auto traj = open_output(fs::path(o.out) / "trajectories.csv");
  write_trajectories_csv(traj, map, sc.terrain);
  auto cuts = open_output(fs::path(o.out) / "cuts.csv");
  write_cuts_csv(cuts, map);
  auto svg = open_output(fs::path(o.out) / "fronts.svg");
  write_fronts_svg(svg, map, sc.terrain, sc.contours);

  int live = 0, cut = 0, left = 0;
  for (const Trajectory& tr : map.trajectories) {
    if (tr.live()) ++live;
    else if (tr.status == TrajectoryStatus::Cut) ++cut;
    else ++left;
  }
  std::printf("%s%s: %zu trajectories, %d live, %d cut, %d left the domain, %zu cut records, %zu fronts (%.2f s)\n",
              sc.name.c_str(), map.minimizing ? "" : " [non-minimizing]", map.trajectories.size(), live, cut, left, map.cuts.size(), map.fronts.size(), secs);
  return kOk;
}

int cmd_indicatrix(const Options& o) {
  const Scenario sc = load(o);
  const FireMetric metric(sc.terrain, sc.fields);
  fs::create_directories(o.out);
  auto svg = open_output(fs::path(o.out) / "indicatrices.svg");
  write_indicatrix_svg(svg, metric, sc.indicatrix, sc.contours);
  std::printf("wrote %s\n", (fs::path(o.out) / "indicatrices.svg").string().c_str());
  return kOk;
}

int cmd_check(const Options& o) {
  const Scenario sc = load(o);
  const FireMetric metric(sc.terrain, sc.fields);
  const ConvexityAudit audit = audit_convexity(metric, sc.solver.t_end);
  std::cout << describe(audit, 50);
  return audit.pass ? kOk : kConvexity;
}

int cmd_oracle(const Options& o) {
  const Scenario sc = load(o);
  const FireMetric metric(sc.terrain, sc.fields);
  require_time_independent(metric, sc.terrain.domain(), sc.solver.t_end);
  GeodesicOptions gopt;
  gopt.renormalize = sc.renormalize;
  const FireMap map = propagate(GeodesicSolver(metric, gopt), sc.ignition, sc.solver);
  OracleSpec spec;
  spec.domain = sc.terrain.domain();
  spec.nx = sc.oracle.nx;
  spec.ny = sc.oracle.ny;
  spec.radius = sc.oracle.radius;
  spec.t_end = sc.solver.t_end;
  const ArrivalGrid grid = grid_arrival(metric, sc.ignition, spec);
  fs::create_directories(o.out);
  if (std::fabs(grid.dx - grid.dy) <= 1e-12 * grid.dx) {
    auto asc = open_output(fs::path(o.out) / "arrival.asc");
    grid.write(asc);
  }
  std::printf("%-10s %8s %10s %10s %10s  %s\n", "t", "vertices", "median", "p95", "max", "flag");
  bool all_ok = true;
  for (const FrontSnapshot& snap : map.fronts) {
    if (snap.t <= 0.0 || snap.vertices.empty()) continue;
    const FrontComparison c = compare_front(grid, snap);
    const bool ok = c.median <= 0.03 && c.p95 <= 0.06;
    all_ok = all_ok && ok;
    std::printf("%-10.4g %8zu %10.4f %10.4f %10.4f  %s\n", snap.t, c.count, c.median, c.p95, c.max,
                ok ? "ok" : "MISMATCH");
  }
  std::printf("%s\n", all_ok ? "fronts agree with the grid oracle" : "fronts disagree with the grid oracle");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wildfire front propagation along lightlike geodesics of a slope and wind Finsler metric"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "Output directory")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads for trajectory stepping")->check(CLI::PositiveNumber);
  app.add_flag("--allow-nonconvex", o.allow_nonconvex, "Run even if the convexity audit fails");
  app.add_flag("--no-renormalize", o.no_renormalize, "Do not project velocities back onto the indicatrix");
  app.add_option("--dt", o.dt, "Override solver.dt");
  app.add_option("--n", o.n, "Override solver.n");

  int (*handler)(const Options&) = nullptr;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("config", o.config, "Scenario file")->required();
    sub->callback([&handler, fn] { handler = fn; });
  };
  add("run", "Propagate the fire and write fronts, trajectories, cuts and an SVG", cmd_run);
  add("indicatrix", "Draw indicatrices on a lattice of the domain", cmd_indicatrix);
  add("check", "Audit strong convexity of the metric", cmd_check);
  add("oracle", "Compare geodesic fronts against grid first-arrival times", cmd_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }
  try {
    return handler(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
}
