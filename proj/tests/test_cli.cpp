#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <string>

#include "gkm.hpp"
#include "report.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPLINEZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

const std::string kP3 = R"({"m":[9,12,8],"edges":[[1,2,20],[2,3,8]]})";
const std::string kT9 =
    R"({"m":[4,15,9,8,12,3,2,5,6],
        "edges":[[6,5,4],[5,1,3],[1,8,9],[1,7,6],[1,9,12],[5,4,5],[4,3,8],[3,2,10]]})";

}  // namespace

TEST_CASE("basis subcommand emits the worked values") {
  auto path = write_file("splinez_cli_p3.json", kP3);
  RunResult r = run_cli("basis " + path.string() + " --method path");
  CHECK(r.code == 0);
  json report = json::parse(r.out);
  CHECK(report["basis"] == json::parse("[[36,96,0],[0,120,0],[0,0,8]]"));

  r = run_cli("basis " + path.string() + " --method gkm");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["leading"] == json::parse("[36,120,8]"));

  r = run_cli("basis " + path.string() + " --method path --trace");
  CHECK(r.code == 0);
  json traced = json::parse(r.out);
  REQUIRE(traced.contains("trace"));
  CHECK(traced["trace"][0][0]["l"] == 4);
}

TEST_CASE("basis longest on the tree") {
  auto path = write_file("splinez_cli_t9.json", kT9);
  RunResult r = run_cli("basis " + path.string() + " --method longest");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["leading"] == json::parse("[12,30,360,8,60,12,6,45,12]"));
}

TEST_CASE("verify subcommand exit codes") {
  auto path = write_file("splinez_cli_p3.json", kP3);
  RunResult good = run_cli("verify " + path.string() + " --spline 36,96,0");
  CHECK(good.code == 0);
  CHECK(json::parse(good.out)["ok"] == true);

  RunResult bad = run_cli("verify " + path.string() + " --spline 36,95,0");
  CHECK(bad.code == 1);
  json report = json::parse(bad.out);
  CHECK(report["ok"] == false);
  CHECK(report["violation"].get<std::string>().find("vertex 2") != std::string::npos);

  RunResult short_vec = run_cli("verify " + path.string() + " --spline 1,2");
  CHECK(short_vec.code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run_cli("basis /nonexistent/file.json").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  auto path = write_file("splinez_cli_bad.json", R"({"m":[0]})");
  CHECK(run_cli("verify " + path.string() + " --spline 0").code == 2);
  auto cycle = write_file("splinez_cli_c3.json", R"({"m":[2,3,5],"edges":[[1,2,7],[2,3,11],[3,1,13]]})");
  CHECK(run_cli("basis " + cycle.string() + " --method path").code == 2);
}

TEST_CASE("enumeration explosion exits with 3") {
  // Fifteen parallel edges create far more trails than the cap allows.
  json doc;
  doc["m"] = {1, 1};
  doc["edges"] = json::array();
  for (int i = 0; i < 15; ++i) doc["edges"].push_back({1, 2, 2});
  auto path = write_file("splinez_cli_multi.json", doc.dump());
  RunResult r = run_cli("basis " + path.string() + " --method longest");
  CHECK(r.code == 3);
}

TEST_CASE("reduce and oracle subcommands") {
  auto path = write_file("splinez_cli_p3.json", kP3);
  RunResult r = run_cli("reduce " + path.string() + " --zeros 1");
  CHECK(r.code == 0);
  json report = json::parse(r.out);
  CHECK(report["graph"]["m"] == json::parse("[60,8]"));
  CHECK(report["vertex_map"] == json::parse("[null,1,2]"));

  r = run_cli("oracle " + path.string());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["ok"] == true);

  r = run_cli("oracle " + path.string() + " --bound 360");
  CHECK(r.code == 0);

  // A window too small to witness the minimal flow-ups is reported as an
  // inconclusive failure, not a crash.
  r = run_cli("oracle " + path.string() + " --bound 60");
  CHECK(r.code == 1);
  json small = json::parse(r.out);
  CHECK(small["ok"] == false);
  bool saw_inconclusive = false;
  for (const auto& c : small["checks"])
    if (!c["ok"].get<bool>()) saw_inconclusive = c["detail"].get<std::string>().find("inconclusive") == 0;
  CHECK(saw_inconclusive);
}

TEST_CASE("csv format") {
  auto path = write_file("splinez_cli_p3.json", kP3);
  RunResult r = run_cli("basis " + path.string() + " --method path --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("# basis\n36,96,0\n0,120,0\n0,0,8\n") != std::string::npos);
}

TEST_CASE("the three basis methods produce span-equal output") {
  std::mt19937_64 rng(127);
  std::uniform_int_distribution<long> label(1, 24);
  for (int it = 0; it < 6; ++it) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    json doc;
    doc["m"] = json::array();
    doc["edges"] = json::array();
    for (int i = 0; i < n; ++i) doc["m"].push_back(label(rng));
    for (int i = 0; i + 1 < n; ++i) doc["edges"].push_back({i + 1, i + 2, label(rng)});
    auto path = write_file("splinez_cli_rand.json", doc.dump());

    splinez::LatticeBasis spans[3];
    const char* methods[3] = {"path", "longest", "gkm"};
    for (int k = 0; k < 3; ++k) {
      RunResult r = run_cli("basis " + path.string() + " --method " + methods[k]);
      REQUIRE(r.code == 0);
      json rows = json::parse(r.out)["basis"];
      spans[k].dim = n;
      for (const auto& row : rows)
        spans[k].rows.push_back(splinez::vec_from_json(row, "$.basis"));
    }
    CHECK(splinez::lattice_equal(spans[0], spans[1]));
    CHECK(splinez::lattice_equal(spans[0], spans[2]));
  }
}
