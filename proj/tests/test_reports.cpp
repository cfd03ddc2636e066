#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "hg/errors.hpp"
#include "hg/report.hpp"

using namespace hg;

#ifndef HG_SOURCE_DIR
#define HG_SOURCE_DIR "."
#endif
#ifndef HG_CLI_PATH
#define HG_CLI_PATH "hopfgalois"
#endif

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(HG_SOURCE_DIR) + "/tests/golden/" + name);
}

int run_cli(const std::string& args, const std::string& out_path) {
  const std::string cmd = std::string(HG_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE_BEGIN("reports");

TEST_CASE("paper example passes all checks and is deterministic") {
  const CommandResult first = run_paper_example();
  CHECK(first.ok);
  CHECK(first.first_failure.empty());
  const CommandResult second = run_paper_example();
  CHECK(first.json.dump(2) == second.json.dump(2));
  CHECK(first.text == second.text);
}

TEST_CASE("paper example matches the golden text output") {
  CHECK(run_paper_example().text == golden("paper_example.txt"));
}

TEST_CASE("paper example matches the golden json output") {
  CHECK(run_paper_example().json.dump(2) + "\n" == golden("paper_example.json"));
}

TEST_CASE("hamiltonian report matches its goldens and passes") {
  const CommandResult result = run_hamiltonian();
  CHECK(result.ok);
  CHECK(result.text == golden("hamiltonian.txt"));
  CHECK(result.json.dump(2) + "\n" == golden("hamiltonian.json"));
}

TEST_CASE("json round-trips losslessly") {
  for (const CommandResult& result : {run_paper_example(), run_hamiltonian()}) {
    const std::string dumped = result.json.dump();
    const auto reparsed = nlohmann::ordered_json::parse(dumped);
    CHECK(reparsed == result.json);
    CHECK(reparsed.dump() == dumped);
  }
}

TEST_CASE("text rendering carries the json data") {
  const CommandResult result = run_paper_example();
  for (const auto& s : result.json["structures"]) {
    CHECK(result.text.find(s["label"].get<std::string>()) != std::string::npos);
    for (const auto& g : s["generators"])
      CHECK(result.text.find(g["perm"].get<std::string>()) != std::string::npos);
  }
  CHECK(result.text.find(result.json["g_isomorphisms"]["implementer"]["chosen"]
                             .get<std::string>()) != std::string::npos);
  for (const auto& row : result.json["action_table"]["rows"])
    for (const auto& entry : row["entries"])
      CHECK(result.text.find(entry.get<std::string>()) != std::string::npos);
}

TEST_CASE("discover on the published input reproduces the structure list") {
  const CommandResult discover = run_discover("(1,2,3,4);(1,2)", "(2,3,4)");
  const CommandResult paper = run_paper_example();
  CHECK(discover.json["structures"] == paper.json["structures"]);
  CHECK(discover.json["action_table"] == paper.json["action_table"]);
  CHECK(discover.json["stable_table"] == paper.json["stable_table"]);
  CHECK(discover.ok);
}

TEST_CASE("discover on an abelian regular group finds lambda = rho") {
  // C2^3 acting on itself: the left-regular group is among the structures
  const CommandResult result = run_discover("(1,2)(3,4)(5,6)(7,8);(1,3)(2,4)(5,7)(6,8);(1,5)(2,6)(3,7)(4,8)", "()");
  bool found = false;
  for (const auto& s : result.json["structures"])
    if (s["type"] == "C2xC2xC2") {
      for (const auto& g : s["generators"])
        if (g["perm"] == "(1,2)(3,4)(5,6)(7,8)") found = true;
    }
  CHECK(found);
}

TEST_CASE("discover at index 3 finds the single C3 structure") {
  const CommandResult result = run_discover("(1,2,3,4);(1,2)", "(1,2,3,4);(1,3)");
  REQUIRE(result.json["structures"].size() == 1);
  CHECK(result.json["structures"][0]["type"] == "C3");
  CHECK(result.json["context"]["degree"] == 3);
}

TEST_CASE("discover input validation") {
  CHECK_THROWS_AS(run_discover("(1,2,3,4);(1,2)", "(1,5)"), hg::Error);       // not a subgroup
  CHECK_THROWS_AS(run_discover("(1,2,3", "()"), hg::Error);                   // parse failure
  CHECK_THROWS_AS(run_discover("(1,2,3,4,5,6,7,8,9)", "()"), hg::Error);      // index 9 > 8
}

TEST_CASE("cli subprocess: exit codes and golden text") {
  const std::string tmp = "/tmp/hg_cli_out.txt";
  CHECK(run_cli("paper-example", tmp) == 0);
  CHECK(read_file(tmp) == golden("paper_example.txt"));

  CHECK(run_cli("paper-example --format json", tmp) == 0);
  CHECK(read_file(tmp) == golden("paper_example.json"));

  CHECK(run_cli("hamiltonian --format json", tmp) == 0);
  CHECK(run_cli("discover --group \"(1,2,3,4);(1,2)\" --subgroup \"(2,3,4)\"", tmp) == 0);

  // input errors exit 3
  CHECK(run_cli("discover --group \"(1,2,3\" --subgroup \"()\"", tmp) == 3);
  CHECK(run_cli("discover --group \"(1,2,3,4)\" --subgroup \"(1,2)\"", tmp) == 3);
  CHECK(run_cli("discover --group \"(1,2,3,4,5,6,7,8,9)\" --subgroup \"()\"", tmp) == 3);
}

TEST_SUITE_END();
