#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SCP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "scp_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string put(const std::string& name, const std::string& content) {
  auto path = scratch() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("greedy radius scan on the collinear instance") {
  auto inst = put("collinear.json",
                  R"({"kind":"points2d","points":[[0,0],[1,0],[10,0],[11,0]]})");
  auto res = run_cli("solve greedy --instance " + inst + " --m 2");
  CHECK(res.status == 0);
  CHECK(res.out.find("\"radius\":1.0") != std::string::npos);
  CHECK(res.out.find("\"verified\":true") != std::string::npos);
}

TEST_CASE("exact solve and check round-trip") {
  auto inst = put("square.json",
                  R"({"kind":"points2d","points":[[0,0],[1,0],[0,1],[1,1]]})");
  auto part = (scratch() / "square_part.json").string();
  auto solve =
      run_cli("solve exact --instance " + inst + " --m 2 --r 1 --out " + part);
  CHECK(solve.status == 0);
  auto check =
      run_cli("check --instance " + inst + " --partition " + part + " --r 1");
  CHECK(check.status == 0);
  CHECK(check.out.find("\"cover\":true") != std::string::npos);

  auto tight =
      run_cli("check --instance " + inst + " --partition " + part + " --r 0.5");
  CHECK(tight.status == 1);
}

TEST_CASE("infeasible exact solve exits 1") {
  auto inst = put("square.json",
                  R"({"kind":"points2d","points":[[0,0],[1,0],[0,1],[1,1]]})");
  auto res = run_cli("solve exact --instance " + inst + " --m 3 --r 1");
  CHECK(res.status == 1);
  CHECK(res.out.find("\"status\":\"infeasible\"") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
  auto bad = put("bad.json", "{ not json");
  CHECK(run_cli("solve greedy --instance " + bad + " --m 2").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("solve greedy --m 2").status == 2);
  auto asym = put("asym.json", R"({"kind":"matrix","dist":[[0,1],[2,0]]})");
  CHECK(run_cli("check --instance " + asym + " --partition " + asym +
                " --r 1")
            .status == 2);
}

TEST_CASE("budget exhaustion exits 3") {
  auto inst = put("square.json",
                  R"({"kind":"points2d","points":[[0,0],[1,0],[0,1],[1,1]]})");
  auto res = run_cli("solve exact --instance " + inst +
                     " --m 2 --r 1 --budget-nodes 1");
  CHECK(res.status == 3);
  CHECK(res.out.find("budget-exhausted") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  auto inst = put("collinear.json",
                  R"({"kind":"points2d","points":[[0,0],[1,0],[10,0],[11,0]]})");
  auto a = run_cli("min-radius greedy --instance " + inst + " --m 2");
  auto b = run_cli("min-radius greedy --instance " + inst + " --m 2");
  CHECK(a.out == b.out);
  CHECK(a.status == 0);
}

TEST_CASE("generation pipes into solving") {
  auto out = (scratch() / "gen.json").string();
  CHECK(run_cli("gen random --n 6 --seed 9 --out " + out).status == 0);
  CHECK(run_cli("min-radius exact --instance " + out + " --m 2").status == 0);
}

TEST_CASE("bench") {
  auto inst = put("collinear.json",
                  R"({"kind":"points2d","points":[[0,0],[1,0],[10,0],[11,0]]})");
  auto suite = put("suite.json", R"({"m":2,"solvers":["greedy"],"instances":[")" +
                                     inst + R"("]})");
  auto res = run_cli("bench --suite " + suite);
  CHECK(res.status == 0);
  CHECK(res.out.find("\"ratio\":1.0") != std::string::npos);

  auto empty = put("empty_suite.json", R"({"m":2,"instances":[]})");
  CHECK(run_cli("bench --suite " + empty).status == 2);
}

TEST_CASE("coloring round trip through the command line") {
  auto drawing = put("edge.json",
                     R"({"kind":"planar-orthogonal","vertices":[[0,0],[2,0]],)"
                     R"("edges":[[[0,0],[1,0],[2,0]]]})");
  auto tau = put("tau.json", R"({"colors":[0,1]})");
  auto part = (scratch() / "gadget_part.json").string();
  CHECK(run_cli("from-coloring --instance " + drawing + " --coloring " + tau +
                " --out " + part)
            .status == 0);
  auto back = run_cli("to-coloring --instance " + drawing + " --partition " +
                      part);
  CHECK(back.status == 0);
  CHECK(back.out.find("\"colors\":[0,1]") != std::string::npos);
}

TEST_CASE("render writes svg") {
  auto inst = put("square.json",
                  R"({"kind":"points2d","points":[[0,0],[1,0],[0,1],[1,1]]})");
  auto part = put("square_cover.json",
                  R"({"m":2,"assignment":[0,1,1,0],"radius":1.0,"verified":true})");
  auto res = run_cli("render --instance " + inst + " --partition " + part +
                     " --r 1");
  CHECK(res.status == 0);
  CHECK(res.out.find("<svg") != std::string::npos);
}
