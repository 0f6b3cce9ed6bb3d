#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PARKS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return RunResult{WEXITSTATUS(status), out};
}

std::string data_path(const std::string& name) {
  return std::string(PARKS_TEST_DATA_DIR) + "/" + name;
}

std::string temp_path(const std::string& suffix) {
  return "/tmp/parks_cli_" + std::to_string(getpid()) + "_" + suffix;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

}  // namespace

TEST_CASE("verify command") {
  RunResult ok = run("verify " + data_path("one_tree_6x6.parks") + " " +
                     data_path("one_tree_6x6.cert"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "valid\n");

  RunResult bad = run("verify " + data_path("one_tree_6x6.parks") + " " +
                      data_path("one_tree_6x6_bad.cert"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out == "adjacency 2 3 3 2\ncolumn-count 1\ncolumn-count 2\n");
}

TEST_CASE("solve command") {
  std::string puzzle = data_path("one_tree_6x6.parks");
  std::ifstream cert_in(data_path("one_tree_6x6.cert"), std::ios::binary);
  std::string cert((std::istreambuf_iterator<char>(cert_in)),
                   std::istreambuf_iterator<char>());

  RunResult solved = run("solve " + puzzle);
  CHECK(solved.exit_code == 0);
  CHECK(solved.out == cert);

  RunResult counted = run("solve " + puzzle + " --count");
  CHECK(counted.exit_code == 0);
  CHECK(counted.out == "1\n");

  RunResult untimed = run("solve " + puzzle + " --timeout 0");
  CHECK(untimed.exit_code == 0);

  std::string big = temp_path("bigrows.parks");
  std::string grid = "parks v1\n1 1 12 12\n";
  for (int row = 0; row < 12; ++row) {
    for (int col = 0; col < 12; ++col) {
      grid += std::to_string(row) + (col == 11 ? "\n" : " ");
    }
  }
  write_file(big, grid);
  RunResult timed = run("solve " + big + " --cap 0 --timeout 0.001");
  CHECK(timed.exit_code == 3);
  std::remove(big.c_str());
}

TEST_CASE("solve with multiple solutions") {
  std::string path = temp_path("rows.parks");
  write_file(path,
             "parks v1\n1 1 4 4\n0 0 0 0\n1 1 1 1\n2 2 2 2\n3 3 3 3\n");
  RunResult all = run("solve " + path + " --cap 0");
  CHECK(all.exit_code == 0);
  CHECK(all.out == "0 1\n1 3\n2 0\n3 2\n\n0 2\n1 0\n2 3\n3 1\n");
  RunResult counted = run("solve " + path + " --count");
  CHECK(counted.exit_code == 0);
  CHECK(counted.out == "2\n");
  std::remove(path.c_str());
}

TEST_CASE("unsatisfiable puzzle exits one") {
  std::string path = temp_path("unsat.parks");
  write_file(path, "parks v1\n1 1 2 2\n0 1\n0 1\n");
  RunResult res = run("solve " + path);
  CHECK(res.exit_code == 1);
  CHECK(res.out.empty());
  RunResult counted = run("solve " + path + " --count");
  CHECK(counted.exit_code == 1);
  CHECK(counted.out == "0\n");
  std::remove(path.c_str());
}

TEST_CASE("count-configs command") {
  CHECK(run("count-configs --quota 1,1 --dims 3,3").out == "0\n");
  CHECK(run("count-configs --quota 1,1 --dims 6,6").out == "90\n");
  CHECK(run("count-configs --quota 1,1 --dims 13,13").out == "831283558\n");
  CHECK(run("count-configs --quota 1,2 --dims 5,10").out == "282\n");

  RunResult listed = run("count-configs --quota 1,1 --dims 4,4 --list");
  CHECK(listed.exit_code == 0);
  CHECK(listed.out == "0 1\n1 3\n2 0\n3 2\n\n0 2\n1 0\n2 3\n3 1\n");

  RunResult timed = run("count-configs --quota 2,2 --dims 12,12 --timeout 0.001");
  CHECK(timed.exit_code == 3);
}

TEST_CASE("shuriken command") {
  RunResult left = run("shuriken --quota 1,1 --side left");
  CHECK(left.exit_code == 0);
  CHECK(left.out == "0 1\n1 3\n2 0\n3 2\n");
  RunResult right = run("shuriken --quota 1,1 --side right");
  CHECK(right.out == "0 2\n1 0\n2 3\n3 1\n");
  RunResult wide = run("shuriken --quota 2,1 --side left");
  CHECK(wide.exit_code == 0);
  CHECK(wide.out.substr(0, 4) == "0 1\n");
}

TEST_CASE("sequence command") {
  CHECK(run("sequence a002464 --n 13").out == "831283558\n");
  CHECK(run("sequence a002464 --n 8 --method explicit").out == "5242\n");
  CHECK(run("sequence a002464 --n 5 --method enumerate").out == "14\n");
  CHECK(run("sequence a002464 --n 0 --method recurrence").out == "1\n");
}

TEST_CASE("census command") {
  RunResult analytic = run("census --mode analytic");
  CHECK(analytic.exit_code == 0);
  CHECK(analytic.out ==
        "one-sided 15204352\nunique-total 30408704\nat-least-one 31981568\n");
  RunResult contiguous = run("census --mode contiguous");
  CHECK(contiguous.exit_code == 0);
  CHECK(contiguous.out == "one-sided 5880\nunique-total 11760\n");
}

TEST_CASE("stirling2 command") {
  CHECK(run("stirling2 4 2").out == "7\n");
  CHECK(run("stirling2 16 4").out == "171798901\n");
  CHECK(run("stirling2 0 0").out == "1\n");
}

TEST_CASE("reduce command round-trips through the solver") {
  std::string puzzle_path = temp_path("reduced.parks");
  std::string map_path = temp_path("reduced.map");
  RunResult reduced = run("reduce " + data_path("two_clause.cnf") +
                          " --quota 1,1 -o " + puzzle_path + " --map " + map_path);
  CHECK(reduced.exit_code == 0);
  CHECK(reduced.out.empty());

  std::ifstream puzzle_in(puzzle_path, std::ios::binary);
  std::string header;
  std::getline(puzzle_in, header);
  CHECK(header == "parks v1");
  std::string dims;
  std::getline(puzzle_in, dims);
  CHECK(dims == "1 1 35 35");

  std::ifstream map_in(map_path, std::ios::binary);
  std::string map_header;
  std::getline(map_in, map_header);
  CHECK(map_header == "parksmap v1");

  RunResult counted = run("solve " + puzzle_path + " --count");
  CHECK(counted.exit_code == 0);
  CHECK(counted.out == "12\n");

  std::remove(puzzle_path.c_str());
  std::remove(map_path.c_str());
}

TEST_CASE("json envelope") {
  RunResult res = run("--json count-configs --quota 1,1 --dims 6,6");
  CHECK(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["command"] == "count-configs");
  CHECK(j["result"]["count"] == "90");
  CHECK(j.contains("params"));
  CHECK(j.contains("stats"));

  RunResult verify_json = run("--json verify " + data_path("one_tree_6x6.parks") +
                              " " + data_path("one_tree_6x6.cert"));
  CHECK(verify_json.exit_code == 0);
  nlohmann::json v = nlohmann::json::parse(verify_json.out);
  CHECK(v["command"] == "verify");
  CHECK(v["result"]["valid"] == true);

  RunResult seq_json = run("--json sequence a002464 --n 13");
  nlohmann::json s = nlohmann::json::parse(seq_json.out);
  CHECK(s["result"]["value"] == "831283558");
}

TEST_CASE("usage errors exit two") {
  CHECK(run("bogus").exit_code == 2);
  CHECK(run("solve").exit_code == 2);
  CHECK(run("shuriken --quota 1,1 --side up").exit_code == 2);
  CHECK(run("count-configs --quota 1 --dims 4,4").exit_code == 2);
  CHECK(run("sequence a000001 --n 3").exit_code == 2);

  std::string path = temp_path("broken.parks");
  write_file(path, "parks v2\n");
  CHECK(run("verify " + path + " " + data_path("one_tree_6x6.cert")).exit_code == 2);
  CHECK(run("solve " + path).exit_code == 2);
  std::remove(path.c_str());
}
