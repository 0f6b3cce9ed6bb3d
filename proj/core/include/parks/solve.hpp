#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "parks/board.hpp"

namespace parks {

enum class CellState : std::uint8_t { Unknown, Tree, Excluded };

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t propagation_steps = 0;
  std::uint64_t solutions_found = 0;
  int max_depth = 0;
};

struct Propagation {
  std::vector<CellState> state;
  bool contradiction = false;
  std::uint64_t steps = 0;
};

// Runs the deduction rules to their fixed point: adjacency exclusion, unit
// exhaustion, quota saturation, and row/column/park confinement.
Propagation propagate(const Puzzle& puzzle, std::vector<CellState> state);

struct SolveOptions {
  std::uint64_t cap = 2;  // 0 means unbounded
  std::optional<std::chrono::milliseconds> deadline;
};

struct SolveResult {
  std::vector<Certificate> solutions;
  SearchStats stats;
  bool complete = true;
};

SolveResult solve(const Puzzle& puzzle, const SolveOptions& opts = {});

mpz_class count_solutions(
    const Puzzle& puzzle,
    std::optional<std::chrono::milliseconds> deadline = std::nullopt);

}  // namespace parks
