#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "parks/board.hpp"
#include "parks/enumerate.hpp"
#include "parks/errors.hpp"
#include "parks/solve.hpp"
#include "parks/verify.hpp"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(PARKS_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// One park per row: every row-and-column placement satisfies the park rule,
// so the solutions are exactly the bare-board configurations.
parks::Puzzle row_parks(int n) {
  parks::Puzzle p;
  p.quota = parks::Quota{1, 1};
  p.dims = parks::BoardDims{n, n};
  p.parks.resize(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      p.parks[static_cast<std::size_t>(row) * n + col] = row;
    }
  }
  return p;
}

}  // namespace

TEST_CASE("propagation alone solves the forced puzzle") {
  parks::Puzzle p = parks::parse_puzzle(slurp("forced_6x6.parks"));
  parks::Certificate expected = parks::parse_certificate(slurp("forced_6x6.cert"));

  std::vector<parks::CellState> cells(36, parks::CellState::Unknown);
  parks::Propagation result = parks::propagate(p, cells);
  CHECK_FALSE(result.contradiction);
  CHECK(result.steps > 0);

  parks::Certificate derived;
  for (int row = 0; row < 6; ++row) {
    for (int col = 0; col < 6; ++col) {
      if (result.state[static_cast<std::size_t>(row) * 6 + col] ==
          parks::CellState::Tree) {
        derived.trees.push_back(parks::Cell{row, col});
      }
    }
  }
  CHECK(derived == expected);

  parks::Propagation again = parks::propagate(p, result.state);
  CHECK_FALSE(again.contradiction);
  CHECK(again.steps == 0);
  CHECK(again.state == result.state);
}

TEST_CASE("solve finds the forced solution without branching") {
  parks::Puzzle p = parks::parse_puzzle(slurp("forced_6x6.parks"));
  parks::SolveResult res = parks::solve(p, parks::SolveOptions{0, std::nullopt});
  CHECK(res.complete);
  REQUIRE(res.solutions.size() == 1);
  CHECK(res.solutions[0] == parks::parse_certificate(slurp("forced_6x6.cert")));
  CHECK(res.stats.solutions_found == 1);
  CHECK(res.stats.nodes_expanded == 1);
  CHECK(res.stats.max_depth == 0);
  CHECK(parks::verify(p, res.solutions[0]).valid);
}

TEST_CASE("solve finds the unique sample solution") {
  parks::Puzzle p = parks::parse_puzzle(slurp("one_tree_6x6.parks"));
  parks::SolveResult res = parks::solve(p, parks::SolveOptions{0, std::nullopt});
  CHECK(res.complete);
  REQUIRE(res.solutions.size() == 1);
  CHECK(res.solutions[0] == parks::parse_certificate(slurp("one_tree_6x6.cert")));
  CHECK(parks::verify(p, res.solutions[0]).valid);
}

TEST_CASE("row-park boards enumerate bare configurations") {
  parks::Puzzle p = row_parks(4);
  parks::SolveResult res = parks::solve(p, parks::SolveOptions{0, std::nullopt});
  CHECK(res.complete);
  REQUIRE(res.solutions.size() == 2);
  CHECK(res.solutions[0] ==
        parks::shuriken(parks::Quota{1, 1}, parks::ShurikenSide::Left));
  CHECK(res.solutions[1] ==
        parks::shuriken(parks::Quota{1, 1}, parks::ShurikenSide::Right));
  CHECK(std::is_sorted(res.solutions.begin(), res.solutions.end()));
}

TEST_CASE("cap stops the search early") {
  parks::SolveResult res = parks::solve(row_parks(4), parks::SolveOptions{1, std::nullopt});
  CHECK(res.solutions.size() == 1);
  CHECK_FALSE(res.complete);
}

TEST_CASE("unsatisfiable park shapes") {
  parks::Puzzle p;
  p.quota = parks::Quota{1, 1};
  p.dims = parks::BoardDims{2, 2};
  p.parks = {0, 1, 0, 1};
  parks::SolveResult res = parks::solve(p, parks::SolveOptions{0, std::nullopt});
  CHECK(res.complete);
  CHECK(res.solutions.empty());
  CHECK(parks::count_solutions(p, std::nullopt) == 0);
}

TEST_CASE("deadlines") {
  parks::Puzzle p = row_parks(10);
  CHECK_THROWS_AS(parks::count_solutions(p, std::chrono::milliseconds(0)),
                  parks::DeadlineExceeded);
  parks::SolveResult res =
      parks::solve(p, parks::SolveOptions{0, std::chrono::milliseconds(0)});
  CHECK_FALSE(res.complete);
}

TEST_CASE("solution counts match brute force on random boards") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    parks::Puzzle p;
    p.quota = parks::Quota{1, 1};
    p.dims = parks::BoardDims{5, 5};
    p.parks = oracles::random_contiguous_partition(5, 5, 5, rng);
    std::vector<parks::Certificate> expected = oracles::brute_solutions(p);
    parks::SolveResult res = parks::solve(p, parks::SolveOptions{0, std::nullopt});
    REQUIRE(res.complete);
    std::sort(expected.begin(), expected.end());
    REQUIRE(res.solutions == expected);
    CHECK(parks::count_solutions(p, std::nullopt) == expected.size());
  }
}

TEST_CASE("count_solutions agrees with solve on a bigger board") {
  parks::Puzzle p = row_parks(7);
  parks::SolveResult res = parks::solve(p, parks::SolveOptions{0, std::nullopt});
  REQUIRE(res.complete);
  CHECK(parks::count_solutions(p, std::nullopt) == res.solutions.size());
  CHECK(res.solutions.size() == 646);
}
