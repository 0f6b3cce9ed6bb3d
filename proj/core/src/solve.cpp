#include "parks/solve.hpp"

#include <algorithm>
#include <climits>

#include "parks/enumerate.hpp"
#include "parks/errors.hpp"

namespace parks {

namespace {

constexpr std::uint64_t kMaskTableLimit = 4096;

std::uint64_t binom_capped(int a, int b, std::uint64_t cap) {
  if (b < 0 || a < 0 || b > a) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= b; ++i) {
    result = result * static_cast<std::uint64_t>(a - b + i) /
             static_cast<std::uint64_t>(i);
    if (result > cap) return cap + 1;
  }
  return result;
}

// Unit ids: rows [0, m), columns [m, m+n), parks [m+n, m+n+m).
struct Engine {
  const Puzzle& p;
  int m, n, units;
  std::vector<int> quota;
  std::vector<std::vector<int>> park_cells;

  std::vector<CellState> state;
  std::vector<int> trees, unknowns;
  bool contradiction = false;
  std::uint64_t steps = 0;
  std::vector<int> tree_queue;
  std::vector<int> dirty_units;
  std::vector<char> dirty_flag;

  explicit Engine(const Puzzle& puzzle)
      : p(puzzle),
        m(puzzle.dims.m),
        n(puzzle.dims.n),
        units(2 * m + n),
        quota(static_cast<std::size_t>(units)),
        park_cells(static_cast<std::size_t>(m)),
        dirty_flag(static_cast<std::size_t>(units), 0) {
    for (int i = 0; i < m; ++i) quota[static_cast<std::size_t>(i)] = p.quota.r;
    for (int j = 0; j < n; ++j) {
      quota[static_cast<std::size_t>(m + j)] = p.quota.c;
    }
    for (int pk = 0; pk < m; ++pk) {
      quota[static_cast<std::size_t>(m + n + pk)] = p.quota.r;
    }
    for (int cell = 0; cell < m * n; ++cell) {
      park_cells[static_cast<std::size_t>(p.parks[static_cast<std::size_t>(
                      cell)])]
          .push_back(cell);
    }
  }

  void init(std::vector<CellState> start) {
    state = std::move(start);
    trees.assign(static_cast<std::size_t>(units), 0);
    unknowns.assign(static_cast<std::size_t>(units), 0);
    contradiction = false;
    tree_queue.clear();
    clear_dirty();
    for (int cell = 0; cell < m * n; ++cell) {
      CellState s = state[static_cast<std::size_t>(cell)];
      int i = cell / n, j = cell % n;
      int us[3] = {i, m + j, m + n + p.parks[static_cast<std::size_t>(cell)]};
      for (int u : us) {
        if (s == CellState::Unknown) ++unknowns[static_cast<std::size_t>(u)];
        if (s == CellState::Tree) ++trees[static_cast<std::size_t>(u)];
      }
      if (s == CellState::Tree) tree_queue.push_back(cell);
    }
    for (int u = 0; u < units; ++u) mark_dirty(u);
  }

  void clear_dirty() {
    for (int u : dirty_units) dirty_flag[static_cast<std::size_t>(u)] = 0;
    dirty_units.clear();
  }

  void mark_dirty(int u) {
    if (!dirty_flag[static_cast<std::size_t>(u)]) {
      dirty_flag[static_cast<std::size_t>(u)] = 1;
      dirty_units.push_back(u);
    }
  }

  void assign(int cell, CellState s) {
    if (contradiction) return;
    CellState cur = state[static_cast<std::size_t>(cell)];
    if (cur == s) return;
    if (cur != CellState::Unknown) {
      contradiction = true;
      return;
    }
    state[static_cast<std::size_t>(cell)] = s;
    ++steps;
    int i = cell / n, j = cell % n;
    int us[3] = {i, m + j, m + n + p.parks[static_cast<std::size_t>(cell)]};
    for (int u : us) {
      --unknowns[static_cast<std::size_t>(u)];
      if (s == CellState::Tree) ++trees[static_cast<std::size_t>(u)];
      mark_dirty(u);
    }
    if (s == CellState::Tree) tree_queue.push_back(cell);
  }

  template <typename F>
  void for_unit_cells(int u, F&& f) {
    if (u < m) {
      for (int j = 0; j < n; ++j) f(u * n + j);
    } else if (u < m + n) {
      for (int i = 0; i < m; ++i) f(i * n + (u - m));
    } else {
      for (int cell : park_cells[static_cast<std::size_t>(u - m - n)]) f(cell);
    }
  }

  void check_unit(int u) {
    int t = trees[static_cast<std::size_t>(u)];
    int k = unknowns[static_cast<std::size_t>(u)];
    int q = quota[static_cast<std::size_t>(u)];
    if (t > q || t + k < q) {
      contradiction = true;
      return;
    }
    if (k == 0) return;
    if (t == q) {
      for_unit_cells(u, [&](int cell) {
        if (state[static_cast<std::size_t>(cell)] == CellState::Unknown) {
          assign(cell, CellState::Excluded);
        }
      });
    } else if (t + k == q) {
      for_unit_cells(u, [&](int cell) {
        if (state[static_cast<std::size_t>(cell)] == CellState::Unknown) {
          assign(cell, CellState::Tree);
        }
      });
    }
  }

  void exclude_neighbors(int cell) {
    int i = cell / n, j = cell % n;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        int ni = i + di, nj = j + dj;
        if (ni < 0 || ni >= m || nj < 0 || nj >= n) continue;
        int other = ni * n + nj;
        if (state[static_cast<std::size_t>(other)] == CellState::Tree) {
          contradiction = true;
          return;
        }
        assign(other, CellState::Excluded);
      }
    }
  }

  void confinement_pass() {
    for (int pk = 0; pk < m && !contradiction; ++pk) {
      int u = m + n + pk;
      int rem = quota[static_cast<std::size_t>(u)] -
                trees[static_cast<std::size_t>(u)];
      if (rem <= 0 || unknowns[static_cast<std::size_t>(u)] == 0) continue;
      int row = -1, col = -1;
      bool one_row = true, one_col = true;
      for (int cell : park_cells[static_cast<std::size_t>(pk)]) {
        if (state[static_cast<std::size_t>(cell)] != CellState::Unknown) {
          continue;
        }
        int i = cell / n, j = cell % n;
        if (row == -1) {
          row = i;
          col = j;
        } else {
          if (i != row) one_row = false;
          if (j != col) one_col = false;
        }
      }
      if (row < 0) continue;
      if (one_row &&
          rem == quota[static_cast<std::size_t>(row)] -
                     trees[static_cast<std::size_t>(row)]) {
        for (int j = 0; j < n; ++j) {
          int cell = row * n + j;
          if (state[static_cast<std::size_t>(cell)] == CellState::Unknown &&
              p.parks[static_cast<std::size_t>(cell)] != pk) {
            assign(cell, CellState::Excluded);
          }
        }
      }
      if (one_col &&
          rem == quota[static_cast<std::size_t>(m + col)] -
                     trees[static_cast<std::size_t>(m + col)]) {
        for (int i = 0; i < m; ++i) {
          int cell = i * n + col;
          if (state[static_cast<std::size_t>(cell)] == CellState::Unknown &&
              p.parks[static_cast<std::size_t>(cell)] != pk) {
            assign(cell, CellState::Excluded);
          }
        }
      }
    }
    for (int u = 0; u < m + n && !contradiction; ++u) {
      int rem = quota[static_cast<std::size_t>(u)] -
                trees[static_cast<std::size_t>(u)];
      if (rem <= 0 || unknowns[static_cast<std::size_t>(u)] == 0) continue;
      int pk = -1;
      bool one_park = true;
      for_unit_cells(u, [&](int cell) {
        if (state[static_cast<std::size_t>(cell)] != CellState::Unknown) {
          return;
        }
        int park = p.parks[static_cast<std::size_t>(cell)];
        if (pk == -1) {
          pk = park;
        } else if (park != pk) {
          one_park = false;
        }
      });
      if (pk < 0 || !one_park) continue;
      int pu = m + n + pk;
      if (rem != quota[static_cast<std::size_t>(pu)] -
                     trees[static_cast<std::size_t>(pu)]) {
        continue;
      }
      bool row_unit = u < m;
      int line = row_unit ? u : u - m;
      for (int cell : park_cells[static_cast<std::size_t>(pk)]) {
        int coord = row_unit ? cell / n : cell % n;
        if (coord != line &&
            state[static_cast<std::size_t>(cell)] == CellState::Unknown) {
          assign(cell, CellState::Excluded);
        }
      }
    }
  }

  void run() {
    for (;;) {
      while (!contradiction &&
             (!tree_queue.empty() || !dirty_units.empty())) {
        if (!tree_queue.empty()) {
          int cell = tree_queue.back();
          tree_queue.pop_back();
          exclude_neighbors(cell);
        } else {
          int u = dirty_units.back();
          dirty_units.pop_back();
          dirty_flag[static_cast<std::size_t>(u)] = 0;
          check_unit(u);
        }
      }
      if (contradiction) {
        tree_queue.clear();
        clear_dirty();
        return;
      }
      std::uint64_t before = steps;
      confinement_pass();
      if (contradiction || steps == before) {
        if (contradiction) {
          tree_queue.clear();
          clear_dirty();
        }
        return;
      }
    }
  }
};

struct Searcher {
  Engine eng;
  SearchStats stats;
  std::uint64_t cap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::vector<Certificate>* store = nullptr;
  mpz_class* counter = nullptr;
  bool aborted = false;
  bool capped = false;
  std::vector<std::uint64_t> masks;
  bool use_masks = false;

  Searcher(const Puzzle& puzzle, std::uint64_t cap_limit,
           std::optional<std::chrono::milliseconds> time_limit)
      : eng(puzzle), cap(cap_limit) {
    if (time_limit) {
      deadline = std::chrono::steady_clock::now() + *time_limit;
    }
    if (eng.n >= 1 && eng.n <= 64 &&
        binom_capped(eng.n - puzzle.quota.r + 1, puzzle.quota.r,
                     kMaskTableLimit) <= kMaskTableLimit) {
      masks = row_masks(eng.n, puzzle.quota.r);
      use_masks = !masks.empty();
    }
  }

  bool rows_completable() {
    for (int i = 0; i < eng.m; ++i) {
      if (eng.quota[static_cast<std::size_t>(i)] ==
          eng.trees[static_cast<std::size_t>(i)]) {
        continue;
      }
      std::uint64_t have = 0, banned = 0;
      for (int j = 0; j < eng.n; ++j) {
        CellState s = eng.state[static_cast<std::size_t>(i * eng.n + j)];
        if (s == CellState::Tree) have |= std::uint64_t(1) << j;
        if (s == CellState::Excluded) banned |= std::uint64_t(1) << j;
      }
      bool feasible = false;
      for (std::uint64_t mask : masks) {
        if ((mask & banned) == 0 && (mask & have) == have) {
          feasible = true;
          break;
        }
      }
      if (!feasible) return false;
    }
    return true;
  }

  int pick_unit() const {
    int best = -1, best_unknowns = INT_MAX;
    for (int u = 0; u < eng.units; ++u) {
      if (eng.quota[static_cast<std::size_t>(u)] -
              eng.trees[static_cast<std::size_t>(u)] <=
          0) {
        continue;
      }
      int k = eng.unknowns[static_cast<std::size_t>(u)];
      if (k < best_unknowns) {
        best_unknowns = k;
        best = u;
      }
    }
    return best;
  }

  int first_unknown(int u) {
    int found = -1;
    eng.for_unit_cells(u, [&](int cell) {
      if (found < 0 &&
          eng.state[static_cast<std::size_t>(cell)] == CellState::Unknown) {
        found = cell;
      }
    });
    return found;
  }

  void emit() {
    Certificate cert;
    for (int cell = 0; cell < eng.m * eng.n; ++cell) {
      if (eng.state[static_cast<std::size_t>(cell)] == CellState::Tree) {
        cert.trees.push_back(Cell{cell / eng.n, cell % eng.n});
      }
    }
    ++stats.solutions_found;
    if (store) store->push_back(std::move(cert));
    if (counter) ++*counter;
    if (cap != 0 && stats.solutions_found >= cap) capped = true;
  }

  void search(int depth) {
    if (aborted || capped) return;
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      aborted = true;
      return;
    }
    ++stats.nodes_expanded;
    stats.max_depth = std::max(stats.max_depth, depth);
    int unit = pick_unit();
    if (unit < 0) {
      emit();
      return;
    }
    if (use_masks && !rows_completable()) return;
    int cell = first_unknown(unit);
    auto saved_state = eng.state;
    auto saved_trees = eng.trees;
    auto saved_unknowns = eng.unknowns;
    for (CellState choice : {CellState::Tree, CellState::Excluded}) {
      eng.assign(cell, choice);
      eng.run();
      if (!eng.contradiction) search(depth + 1);
      eng.state = saved_state;
      eng.trees = saved_trees;
      eng.unknowns = saved_unknowns;
      eng.contradiction = false;
      eng.tree_queue.clear();
      eng.clear_dirty();
      if (aborted || capped) return;
    }
  }

  bool run_root() {
    eng.init(std::vector<CellState>(
        static_cast<std::size_t>(eng.m) * static_cast<std::size_t>(eng.n),
        CellState::Unknown));
    eng.run();
    if (!eng.contradiction) search(0);
    stats.propagation_steps = eng.steps;
    return !aborted;
  }
};

}  // namespace

Propagation propagate(const Puzzle& puzzle, std::vector<CellState> state) {
  Engine eng(puzzle);
  eng.init(std::move(state));
  eng.run();
  return Propagation{std::move(eng.state), eng.contradiction, eng.steps};
}

SolveResult solve(const Puzzle& puzzle, const SolveOptions& opts) {
  Searcher searcher(puzzle, opts.cap, opts.deadline);
  SolveResult result;
  searcher.store = &result.solutions;
  bool finished = searcher.run_root();
  result.stats = searcher.stats;
  result.complete = finished && !searcher.capped;
  std::sort(result.solutions.begin(), result.solutions.end());
  return result;
}

mpz_class count_solutions(const Puzzle& puzzle,
                          std::optional<std::chrono::milliseconds> deadline) {
  Searcher searcher(puzzle, 0, deadline);
  mpz_class count = 0;
  searcher.counter = &count;
  if (!searcher.run_root()) {
    throw DeadlineExceeded();
  }
  return count;
}

}  // namespace parks
