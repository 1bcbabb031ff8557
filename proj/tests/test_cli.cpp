#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kOut = fs::temp_directory_path() / "firefront_cli_test";

int run(const std::string& args) {
  const std::string cmd = std::string(FIREFRONT_CLI) + " " + args + " >" + (kOut / "stdout.txt").string() + " 2>" +
                          (kOut / "stderr.txt").string();
  fs::create_directories(kOut);
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string preset(const std::string& name) { return testing::source_path("scenarios/" + name + ".ini"); }

}  // namespace

TEST_CASE("cli run writes outputs") {
  const fs::path dir = kOut / "fig2";
  fs::remove_all(dir);
  CHECK(run("run " + preset("fig2") + " --out " + dir.string()) == 0);
  for (const char* f : {"fronts.csv", "trajectories.csv", "cuts.csv", "fronts.svg"}) CHECK(fs::exists(dir / f));
  CHECK(slurp(kOut / "stdout.txt").find("fig2: 64 trajectories") != std::string::npos);
}

TEST_CASE("cli overrides") {
  const fs::path dir = kOut / "fig2n";
  CHECK(run("run " + preset("fig2") + " --n 16 --dt 0.05 --threads 2 --out " + dir.string()) == 0);
  CHECK(slurp(kOut / "stdout.txt").find("16 trajectories") != std::string::npos);
  CHECK(run("run " + preset("fig2") + " --n 4") == 3);
  CHECK(run("run " + preset("fig2") + " --dt 0.5") == 3);
}

TEST_CASE("cli convexity handling") {
  CHECK(run("check " + preset("fig2")) == 0);
  CHECK(slurp(kOut / "stdout.txt").find("strongly convex at all") != std::string::npos);
  CHECK(run("check " + preset("fig9")) == 2);
  CHECK(slurp(kOut / "stdout.txt").find("NOT strongly convex") != std::string::npos);
  CHECK(run("run " + preset("fig9") + " --out " + (kOut / "fig9").string()) == 2);
  CHECK(slurp(kOut / "stderr.txt").find("--allow-nonconvex") != std::string::npos);
}

TEST_CASE("cli forced non-convex run is labeled") {
  const fs::path dir = kOut / "fig6";
  CHECK(run("run " + preset("fig6") + " --allow-nonconvex --n 16 --out " + dir.string()) == 0);
  CHECK(slurp(kOut / "stdout.txt").find("[non-minimizing]") != std::string::npos);
  CHECK(slurp(dir / "fronts.svg").find("non-minimizing") != std::string::npos);
}

TEST_CASE("cli configuration errors") {
  CHECK(run("run /nonexistent.ini") == 3);
  CHECK(run("frobnicate " + preset("fig2")) == 3);
  CHECK(run("run") == 3);
  const fs::path bad = kOut / "bad.ini";
  fs::create_directories(kOut);
  {
    std::ofstream out(bad);
    out << "[fields]\na = 1\nh = 1\n[ignition]\nkind = point\ncenter = 0, 0\n";
  }
  CHECK(run("run " + bad.string()) == 3);
  CHECK(slurp(kOut / "stderr.txt").find("terrain: required") != std::string::npos);
}

TEST_CASE("cli oracle refuses time-dependent fields") {
  CHECK(run("oracle " + preset("fig8")) == 3);
}

TEST_CASE("cli indicatrix") {
  const fs::path dir = kOut / "ind";
  CHECK(run("indicatrix " + preset("fig3") + " --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "indicatrices.svg"));
}
