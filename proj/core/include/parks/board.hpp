#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "parks/errors.hpp"

namespace parks {

struct Quota {
  int c = 1;  // trees per column
  int r = 1;  // trees per row and per park

  bool operator==(const Quota&) const = default;
};

struct BoardDims {
  int m = 0;  // rows
  int n = 0;  // columns

  bool operator==(const BoardDims&) const = default;
};

struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

// Park ids run 0..m-1; parks[row * n + col] holds the id of that cell's park.
struct Puzzle {
  Quota quota;
  BoardDims dims;
  std::vector<int> parks;

  int park_at(int row, int col) const {
    return parks[static_cast<std::size_t>(row) * dims.n + col];
  }
  int& park_at(int row, int col) {
    return parks[static_cast<std::size_t>(row) * dims.n + col];
  }

  bool operator==(const Puzzle&) const = default;
};

struct Certificate {
  std::vector<Cell> trees;  // kept sorted by (row, col)

  bool operator==(const Certificate&) const = default;
  auto operator<=>(const Certificate&) const = default;
};

enum class ViolationKind {
  ColumnCount,
  RowCount,
  ParkCount,
  Adjacency,
  OutOfBounds,
  Duplicate,
};

struct Violation {
  ViolationKind kind = ViolationKind::Adjacency;
  int index = -1;  // offending row/column/park for the count kinds
  Cell a;          // offending cell; first of the pair for Adjacency
  Cell b;          // second of the pair for Adjacency

  bool operator==(const Violation&) const = default;
};

bool kings_adjacent(Cell a, Cell b);

BoardDims valid_sizes(Quota quota, int i);

Puzzle parse_puzzle(const std::string& text);
std::string serialize_puzzle(const Puzzle& p);

Certificate parse_certificate(const std::string& text);
std::string serialize_certificate(const Certificate& cert);

bool is_contiguous(const Puzzle& p);

// Relabels parks in first-appearance order, scanning row-major.
Puzzle canonical_relabel(const Puzzle& p);

std::string violation_to_string(const Violation& v);

}  // namespace parks
