// Runs the hesslab binary; its path comes from the build.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hesslab/polynomial.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HESSLAB_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("hesslab_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("verify theorem2 writes a passing report") {
  fs::path out = scratch() / "t2.json";
  Run r = run("verify theorem2 --radii 1,2,3 --json " + out.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("overall: PASS") != std::string::npos);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["overall"] == true);
  bool four = false;
  for (const auto& c : j["claims"])
    if (c["id"] == "circles") four = c["observed"] == 4;
  CHECK(four);
}

TEST_CASE("classify") {
  Run r = run("classify --family even --radii 1,2 --point 10,0");
  CHECK(r.status == 0);
  CHECK(r.out == "Elliptic\n");
  CHECK(run("classify --poly 'x*y' --point 1,1").out == "Hyperbolic\n");
  CHECK(run("classify --family odd --n 1 --point 10,0").out == "Hyperbolic\n");
}

TEST_CASE("good-position failure") {
  Run r = run("verify theorem1 --a 1 --b -1 --ai -2,-3");
  CHECK(r.status == 1);
  CHECK(r.out.find("(-2, 0)") != std::string::npos);
}

TEST_CASE("invalid input") {
  CHECK(run("verify theorem2 --radii 0.5").status == 2);
  Run order = run("family --family outer --a 1 --b -1 --ai -2,-1");
  CHECK(order.status == 2);
  CHECK(order.out.find("requires a_m < ... < a_1 < 0") != std::string::npos);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("verify theorem4 --n 2").status == 2);
}

TEST_CASE("family output round-trips through the parser") {
  Run r = run("family --family outer --a 2 --b -1 --ai -1,-2 --bj 1,3");
  REQUIRE(r.status == 0);
  std::string line = r.out.substr(0, r.out.find('\n'));
  auto p = hesslab::parse_polynomial(line);
  CHECK(p.degree() == 6);
  CHECK(hesslab::to_string(p) == line);
}

TEST_CASE("trace exports") {
  fs::path dir = scratch();
  Run r = run("trace --family odd --n 2 --svg " + (dir / "odd.svg").string() + " --csv " + (dir / "odd.csv").string());
  CHECK(r.status == 0);
  CHECK(r.out.find("components: 3") != std::string::npos);
  std::string svg = slurp(dir / "odd.svg");
  int paths = 0;
  for (size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) ++paths;
  CHECK(paths == 3);
  CHECK(slurp(dir / "odd.csv").rfind("component,depth,closed,vertex,x,y", 0) == 0);
  Run empty = run("trace --poly 'x^2+y^2+1' --bbox -2,2,-2,2 --svg " + (dir / "empty.svg").string());
  CHECK(empty.status == 0);
  CHECK(slurp(dir / "empty.svg").find("<path") == std::string::npos);
  CHECK(run("trace --poly 'x' --bbox -2,2,-2,2 --svg /nonexistent/dir/x.svg").status != 0);
}

TEST_CASE("seeded reports are identical") {
  fs::path dir = scratch();
  std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  CHECK(run("verify theorem1 --a 1 --b -1 --ai -1 --bj 1 --seed 7 --json " + a).status == 0);
  CHECK(run("verify theorem1 --a 1 --b -1 --ai -1 --bj 1 --seed 7 --json " + b).status == 0);
  CHECK(slurp(a) == slurp(b));
  auto j = nlohmann::json::parse(slurp(a));
  CHECK(j["claims"].size() == 7);
}

TEST_CASE("affine-check") {
  Run r = run("affine-check --poly 'x*y' --linear 1,1,0,1 --translation 0,1");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("holds", 0) == 0);
  CHECK(run("affine-check --poly 'x*y' --linear 1,2,2,4").status == 2);
}

TEST_CASE("instance files") {
  fs::path file = scratch() / "odd.json";
  std::ofstream(file) << R"({"family":"odd","n":2})";
  Run r = run("verify theorem3 --instance " + file.string());
  CHECK(r.status == 0);
}
