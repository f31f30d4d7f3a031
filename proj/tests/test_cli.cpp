#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out_path = fs::temp_directory_path() / ("whl_cli_out_" + std::to_string(counter++));
  std::string command = std::string(WHL_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
  int status = std::system(command.c_str());
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  fs::remove(out_path);
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, buffer.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("cli build and extract round trip") {
  RunResult built = run_cli("build \"123;02346;345\"");
  REQUIRE(built.exit_code == 0);
  auto j = nlohmann::json::parse(built.out);
  CHECK(j["n"] == 7);
  CHECK(j["edges"].size() == 6);

  fs::path file = write_temp("whl_seven.json", built.out);
  RunResult verified = run_cli("verify " + file.string());
  CHECK(verified.exit_code == 0);
  RunResult extracted = run_cli("extract " + file.string());
  CHECK(extracted.exit_code == 0);
  CHECK(extracted.out == "1,2,3;0,2,3,4,6;3,4,5\n");
  fs::remove(file);
}

TEST_CASE("cli exit codes") {
  // Verification failure is a domain failure: exit 1.
  fs::path bad = write_temp("whl_bad.json", R"({"n":4,"edges":[[0,1],[1,2],[1,3]]})");
  CHECK(run_cli("verify " + bad.string()).exit_code == 1);
  fs::remove(bad);

  // Axiom violation on build: exit 1.
  CHECK(run_cli("build \"01347;13457\"").exit_code == 1);

  // Malformed notation and malformed JSON: exit 2, naming the culprit.
  RunResult r = run_cli("build \"1,2,zz\"");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("zz") != std::string::npos);
  fs::path broken = write_temp("whl_broken.json", "{not json");
  CHECK(run_cli("verify " + broken.string()).exit_code == 2);
  fs::remove(broken);

  // Unknown flags: exit 2.
  CHECK(run_cli("enumerate --frobnicate").exit_code == 2);
}

TEST_CASE("cli enumerate") {
  RunResult r = run_cli("enumerate --n 5");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 2);
  CHECK(j["collections"][0] == "0,1,2,3,4");
  CHECK(j["collections"][1] == "0,1,2;1,2,3;2,3,4");
}

TEST_CASE("cli multigraph verify and total") {
  fs::path multi = write_temp("whl_multi.json",
                              R"({"n":5,"edges":[[0,1,6],[1,2,1],[1,3,1],[1,4,1]]})");
  CHECK(run_cli("verify " + multi.string()).exit_code == 0);
  RunResult extracted = run_cli("extract " + multi.string());
  CHECK(extracted.out == "0^6,1,2,3,4\n");
  fs::remove(multi);

  fs::path diamond = write_temp("whl_diamond.json",
                                R"({"n":5,"edges":[[0,1],[1,2],[1,3],[2,3],[3,4]]})");
  RunResult total = run_cli("total " + diamond.string());
  REQUIRE(total.exit_code == 0);
  fs::path weighted = write_temp("whl_weighted.json", total.out);
  CHECK(run_cli("verify --total " + weighted.string()).exit_code == 0);
  fs::remove(diamond);
  fs::remove(weighted);
}

TEST_CASE("cli family windows") {
  RunResult r = run_cli("family pb-window --base \"0:2,1:3,3:5\" --lo -2 --hi 10 --check");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  // Labels run -2..10; vertex with label 4 sits at index 6 and must see
  // neighbors 1,2,3,5,6,7 (indices 3,4,5,7,8,9).
  std::set<int> nbrs;
  for (const auto& e : j["edges"]) {
    if (e[0] == 6) nbrs.insert(e[1].get<int>());
    if (e[1] == 6) nbrs.insert(e[0].get<int>());
  }
  CHECK(nbrs == std::set<int>{3, 4, 5, 7, 8, 9});

  CHECK(run_cli("family c-grid --k 3 --h 4").exit_code == 0);
  CHECK(run_cli("family star --n 3").exit_code == 2);
}

TEST_CASE("cli export dot") {
  fs::path graph = write_temp("whl_dot_in.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3]]})");
  fs::path dot = fs::temp_directory_path() / "whl_dot_out.dot";
  CHECK(run_cli("export --dot " + graph.string() + " " + dot.string()).exit_code == 0);
  std::ifstream in(dot);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().find("graph {") != std::string::npos);
  CHECK(buffer.str().find("fillcolor=green") != std::string::npos);
  fs::remove(graph);
  fs::remove(dot);
}

TEST_CASE("cli extract rejects unverified input as a domain failure") {
  fs::path bad = write_temp("whl_unverified.json", R"({"n":4,"edges":[[0,1],[1,2],[1,3]]})");
  RunResult r = run_cli("extract " + bad.string());
  CHECK(r.exit_code == 1);
  fs::remove(bad);
}
