#include "parks/sequences.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "parks/enumerate.hpp"
#include "parks/verify.hpp"

namespace parks {

mpz_class a002464_recurrence(unsigned n) {
  mpz_class c0 = 1, c1 = 1, c2 = 0, c3 = 0;
  if (n == 0) return c0;
  if (n == 1) return c1;
  if (n == 2) return c2;
  if (n == 3) return c3;
  for (unsigned i = 4; i <= n; ++i) {
    long k = static_cast<long>(i);
    mpz_class next = (k + 1) * c3 - (k - 2) * c2 - (k - 5) * c1 + (k - 3) * c0;
    c0 = c1;
    c1 = c2;
    c2 = c3;
    c3 = next;
  }
  return c3;
}

mpz_class a002464_explicit(unsigned n) {
  mpz_class total, term, binom;
  mpz_fac_ui(total.get_mpz_t(), n);
  for (unsigned k = 1; k + 1 <= n; ++k) {
    mpz_class inner = 0;
    for (unsigned r = 1; r <= k; ++r) {
      mpz_bin_uiui(binom.get_mpz_t(), n - k, r);
      term = binom;
      mpz_bin_uiui(binom.get_mpz_t(), k - 1, r - 1);
      term *= binom;
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), r);
      inner += term;
    }
    mpz_fac_ui(term.get_mpz_t(), n - k);
    inner *= term;
    if (k % 2 == 1) {
      total -= inner;
    } else {
      total += inner;
    }
  }
  return total;
}

mpz_class stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<mpz_class> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) {
      row[j] = j * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

namespace {

// Row-major scan assigning each cell a class label in first-appearance
// order, so every partition is produced exactly once. With the
// connectivity filter on, a component that cannot reach the next row either
// is its whole class (the class closes) or dooms the assignment.
struct GridScan {
  int rows = 0, cols = 0, parts = 0, total = 0;
  bool connected = false;
  std::uint64_t adj[64] = {};
  std::uint64_t class_cells[8] = {};
  bool closed[8] = {};
  int labels[64] = {};

  std::uint64_t component_from(std::uint64_t seed, std::uint64_t cells) const {
    std::uint64_t comp = seed;
    for (;;) {
      std::uint64_t grown = comp;
      for (std::uint64_t bits = comp; bits;) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        grown |= adj[b] & cells;
      }
      if (grown == comp) return comp;
      comp = grown;
    }
  }

  bool single_component(std::uint64_t cells) const {
    std::uint64_t seed = cells & (~cells + 1);
    return component_from(seed, cells) == cells;
  }

  bool seal_row(int row, int used) {
    std::uint64_t row_mask = ((std::uint64_t(1) << cols) - 1)
                             << (row * cols);
    for (int l = 0; l < used; ++l) {
      if (closed[l]) continue;
      std::uint64_t cells = class_cells[l];
      std::uint64_t rest = cells;
      while (rest) {
        std::uint64_t comp = component_from(rest & (~rest + 1), cells);
        rest &= ~comp;
        if ((comp & row_mask) == 0) {
          if (comp != cells) return false;
          closed[l] = true;
        }
      }
    }
    return true;
  }

  template <typename Done>
  void rec(int pos, int used, Done&& done) {
    if (pos == total) {
      if (used != parts) return;
      if (connected) {
        for (int l = 0; l < used; ++l) {
          if (!single_component(class_cells[l])) return;
        }
      }
      done(labels);
      return;
    }
    if (parts - used > total - pos) return;
    std::uint64_t bit = std::uint64_t(1) << pos;
    int limit = std::min(used + 1, parts);
    for (int l = 0; l < limit; ++l) {
      if (connected && l < used && closed[l]) continue;
      labels[pos] = l;
      class_cells[l] |= bit;
      int next_used = std::max(used, l + 1);
      if (connected && pos % cols == cols - 1 && pos / cols < rows - 1) {
        bool saved[8];
        std::memcpy(saved, closed, sizeof saved);
        if (seal_row(pos / cols, next_used)) {
          rec(pos + 1, next_used, done);
        }
        std::memcpy(closed, saved, sizeof saved);
      } else {
        rec(pos + 1, next_used, done);
      }
      class_cells[l] &= ~bit;
    }
  }
};

template <typename Done>
void scan_partitions(int rows, int cols, int parts, bool connected,
                     Done&& done) {
  if (rows < 0 || cols < 0 || parts < 0 || parts > 8) {
    throw std::invalid_argument("partition scan limited to 8 classes");
  }
  long long total = static_cast<long long>(rows) * cols;
  if (total > 64) {
    throw std::invalid_argument("partition scan limited to 64 cells");
  }
  GridScan scan;
  scan.rows = rows;
  scan.cols = cols;
  scan.parts = parts;
  scan.total = static_cast<int>(total);
  scan.connected = connected;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int b = i * cols + j;
      std::uint64_t a = 0;
      if (i > 0) a |= std::uint64_t(1) << (b - cols);
      if (i < rows - 1) a |= std::uint64_t(1) << (b + cols);
      if (j > 0) a |= std::uint64_t(1) << (b - 1);
      if (j < cols - 1) a |= std::uint64_t(1) << (b + 1);
      scan.adj[b] = a;
    }
  }
  scan.rec(0, 0, done);
}

}  // namespace

mpz_class count_grid_partitions(int rows, int cols, int parts,
                                bool require_connected) {
  unsigned long long count = 0;
  scan_partitions(rows, cols, parts, require_connected,
                  [&](const int*) { ++count; });
  return mpz_class(static_cast<unsigned long>(count));
}

CensusReport census_4x4_noncontiguous() {
  CensusReport report;
  mpz_class p12, p8;
  mpz_ui_pow_ui(p12.get_mpz_t(), 4, 12);
  mpz_ui_pow_ui(p8.get_mpz_t(), 4, 8);
  report.noncontiguous_one_sided = p12 - 24 * p8;
  report.noncontiguous_unique_total = 2 * report.noncontiguous_one_sided;
  report.at_least_one_solution_total = 2 * p12 - 24 * p8;
  return report;
}

CensusReport census_4x4_contiguous(std::vector<Puzzle>* one_sided) {
  const Quota quota{1, 1};
  const Certificate left = shuriken(quota, ShurikenSide::Left);
  const Certificate right = shuriken(quota, ShurikenSide::Right);

  unsigned long long count = 0;
  scan_partitions(4, 4, 4, true, [&](const int* labels) {
    bool left_seen[4] = {}, right_seen[4] = {};
    bool left_ok = true, right_ok = true;
    for (const Cell& t : left.trees) {
      int l = labels[t.row * 4 + t.col];
      if (left_seen[l]) left_ok = false;
      left_seen[l] = true;
    }
    for (const Cell& t : right.trees) {
      int l = labels[t.row * 4 + t.col];
      if (right_seen[l]) right_ok = false;
      right_seen[l] = true;
    }
    if (!left_ok || right_ok) return;

    Puzzle puzzle;
    puzzle.quota = quota;
    puzzle.dims = BoardDims{4, 4};
    puzzle.parks.assign(labels, labels + 16);
    if (!verify(puzzle, left).valid || verify(puzzle, right).valid) {
      throw std::logic_error("census disagrees with the verifier");
    }
    ++count;
    if (one_sided) one_sided->push_back(std::move(puzzle));
  });

  CensusReport report;
  report.contiguous_one_sided = static_cast<unsigned long>(count);
  report.contiguous_unique_total = 2 * report.contiguous_one_sided;
  return report;
}

}  // namespace parks
