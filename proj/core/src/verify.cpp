#include "parks/verify.hpp"

#include <algorithm>

namespace parks {

// Follows the sorted-merge structure: sort trees in dictionary order, check
// row counts, then adjacency against the previous row's sorted column list,
// then bucket-count columns and parks. Out-of-bounds trees are reported and
// left out of the counting; duplicates are reported and counted once.
Verdict verify(const Puzzle& p, const Certificate& cert) {
  Verdict verdict;
  auto& out = verdict.violations;

  std::vector<Cell> trees = cert.trees;
  std::sort(trees.begin(), trees.end());

  std::vector<Cell> in_bounds;
  in_bounds.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const Cell& cell = trees[i];
    if (i > 0 && cell == trees[i - 1]) {
      out.push_back(Violation{ViolationKind::Duplicate, -1, cell, {}});
      continue;
    }
    if (cell.row < 0 || cell.row >= p.dims.m || cell.col < 0 ||
        cell.col >= p.dims.n) {
      out.push_back(Violation{ViolationKind::OutOfBounds, -1, cell, {}});
      continue;
    }
    in_bounds.push_back(cell);
  }

  std::vector<int> row_count(static_cast<std::size_t>(p.dims.m), 0);
  std::vector<int> col_count(static_cast<std::size_t>(p.dims.n), 0);
  std::vector<int> park_count(static_cast<std::size_t>(p.dims.m), 0);
  for (const Cell& cell : in_bounds) {
    ++row_count[static_cast<std::size_t>(cell.row)];
    ++col_count[static_cast<std::size_t>(cell.col)];
    ++park_count[static_cast<std::size_t>(p.park_at(cell.row, cell.col))];
  }
  for (int row = 0; row < p.dims.m; ++row) {
    if (row_count[static_cast<std::size_t>(row)] != p.quota.r) {
      out.push_back(Violation{ViolationKind::RowCount, row, {}, {}});
    }
  }

  // in_bounds is sorted by (row, col); rows form consecutive runs.
  std::size_t row_begin = 0;
  std::size_t prev_begin = 0, prev_end = 0;
  int prev_row = -2;
  while (row_begin < in_bounds.size()) {
    int row = in_bounds[row_begin].row;
    std::size_t row_end = row_begin;
    while (row_end < in_bounds.size() && in_bounds[row_end].row == row) {
      ++row_end;
    }
    for (std::size_t i = row_begin + 1; i < row_end; ++i) {
      if (in_bounds[i].col - in_bounds[i - 1].col <= 1) {
        out.push_back(Violation{ViolationKind::Adjacency, -1, in_bounds[i - 1],
                                in_bounds[i]});
      }
    }
    if (row == prev_row + 1) {
      std::size_t j = prev_begin;
      for (std::size_t i = row_begin; i < row_end; ++i) {
        while (j < prev_end && in_bounds[j].col < in_bounds[i].col - 1) ++j;
        for (std::size_t k = j;
             k < prev_end && in_bounds[k].col <= in_bounds[i].col + 1; ++k) {
          out.push_back(Violation{ViolationKind::Adjacency, -1, in_bounds[k],
                                  in_bounds[i]});
        }
      }
    }
    prev_begin = row_begin;
    prev_end = row_end;
    prev_row = row;
    row_begin = row_end;
  }

  for (int col = 0; col < p.dims.n; ++col) {
    if (col_count[static_cast<std::size_t>(col)] != p.quota.c) {
      out.push_back(Violation{ViolationKind::ColumnCount, col, {}, {}});
    }
  }
  for (int park = 0; park < p.dims.m; ++park) {
    if (park_count[static_cast<std::size_t>(park)] != p.quota.r) {
      out.push_back(Violation{ViolationKind::ParkCount, park, {}, {}});
    }
  }

  verdict.valid = out.empty();
  return verdict;
}

}  // namespace parks
