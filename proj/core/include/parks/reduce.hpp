#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "parks/board.hpp"

namespace parks {

struct Literal {
  int var = 0;
  bool negated = false;
  bool operator==(const Literal&) const = default;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

using Assignment = std::vector<bool>;

CnfFormula parse_dimacs(std::string_view text);

// One variable occurrence and the column pair of its variable park. A tree
// at true_col means the literal (not the variable) is true, so the pair is
// swapped for negated occurrences.
struct OccurrenceRef {
  int var = 0;
  int clause = 0;
  int slot = 0;
  bool negated = false;
  int park_id = 0;
  int row = 0;
  int col0 = 0;
  int true_col = 0;
  int false_col = 0;
};

struct GadgetBox {
  std::string name;
  int row0 = 0, col0 = 0, rows = 0, cols = 0;
};

struct ReductionMap {
  Quota quota;
  BoardDims dims{0, 0};
  CnfFormula formula;  // normalized: every variable occurs at least once
  int original_clauses = 0;
  std::vector<OccurrenceRef> occurrences;
  std::vector<GadgetBox> boxes;

  // Placement recipes for assignment_to_certificate.
  std::vector<Cell> fixed_trees;

  struct StatePark {
    int var = 0;
    int park_id = 0;
    std::vector<Cell> when_true, when_false;
  };
  std::vector<StatePark> state_parks;

  struct ClauseParks {
    int yellow = 0, brown = 0, red = 0;
    int yf = 0, bf = 0, rf = 0;
    std::array<int, 3> sorted_slot{};  // original slot per block position
    std::array<std::vector<int>, 3> true_side;   // columns used when the
    std::array<std::vector<int>, 3> false_side;  // literal is true / false
  };
  std::vector<ClauseParks> clause_parks;
};

struct Reduction {
  Puzzle puzzle;
  ReductionMap map;
};

Reduction reduce(const CnfFormula& phi, Quota quota);

Certificate assignment_to_certificate(const ReductionMap& map,
                                      const Puzzle& puzzle,
                                      const Assignment& a);

Assignment certificate_to_assignment(const ReductionMap& map,
                                     const Certificate& cert);

std::string serialize_map(const ReductionMap& map);

// A single variable gate with the given occurrence count, wired to
// quota-balancing parks and a white frame; it has exactly two solutions.
Puzzle iff_probe_puzzle(Quota quota, int occurrences);

}  // namespace parks
