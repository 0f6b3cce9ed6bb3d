#include "parks/reduce.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parks/errors.hpp"

namespace parks {

namespace {

long parse_dimacs_int(const std::string& tok) {
  errno = 0;
  char* end = nullptr;
  long value = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0' || errno == ERANGE) {
    throw ParseError(ParseError::Kind::MalformedDimacs, "bad token '" + tok + "'");
  }
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula phi;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<Literal> pending;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (tok[0] == 'c') continue;
    if (tok == "p") {
      if (have_header) {
        throw ParseError(ParseError::Kind::MalformedDimacs, "duplicate problem line");
      }
      std::string format;
      long vars = 0;
      long clauses = 0;
      if (!(tokens >> format >> vars >> clauses) || format != "cnf" || vars < 1 ||
          clauses < 0) {
        throw ParseError(ParseError::Kind::MalformedDimacs, "bad problem line");
      }
      std::string extra;
      if (tokens >> extra) {
        throw ParseError(ParseError::Kind::MalformedDimacs,
                         "trailing tokens on problem line");
      }
      phi.num_vars = static_cast<int>(vars);
      declared_clauses = clauses;
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ParseError(ParseError::Kind::MalformedDimacs, "clause before problem line");
    }
    do {
      long value = parse_dimacs_int(tok);
      if (value == 0) {
        if (pending.empty()) {
          throw ParseError(ParseError::Kind::EmptyClause, "clause with no literals");
        }
        // Short clauses are padded by repeating the last literal, which keeps
        // the satisfying assignments unchanged.
        while (pending.size() < 3) pending.push_back(pending.back());
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        long var = value < 0 ? -value : value;
        if (var > phi.num_vars) {
          throw ParseError(ParseError::Kind::MalformedDimacs,
                           "literal outside the declared variable range");
        }
        if (pending.size() == 3) {
          throw ParseError(ParseError::Kind::ClauseTooLong,
                           "clause has more than three literals");
        }
        pending.push_back(Literal{static_cast<int>(var) - 1, value < 0});
      }
    } while (tokens >> tok);
  }
  if (!have_header) {
    throw ParseError(ParseError::Kind::MalformedDimacs, "missing problem line");
  }
  if (!pending.empty()) {
    throw ParseError(ParseError::Kind::MalformedDimacs, "unterminated clause");
  }
  if (static_cast<long>(phi.clauses.size()) != declared_clauses) {
    throw ParseError(ParseError::Kind::MalformedDimacs,
                     "clause count disagrees with the problem line");
  }
  return phi;
}

namespace {

// Column pair block hosting one variable occurrence.
struct OccSite {
  int row = 0;
  int col0 = 0;
  int park_id = -1;
};

struct GatePlan {
  int var = 0;
  int k = 0;
  int row0 = 0;
  int col0 = 0;
  int width = 0;
  int height = 0;
};

struct SinglePlan {
  int var = 0;
  int row = 0;
  int col0 = 0;
};

struct Builder {
  Quota quota;
  int c = 1;
  int r = 1;
  bool probe = false;
  bool corner_white = false;
  CnfFormula phi;
  int original_clauses = 0;
  int M = 0;
  int N = 0;
  std::vector<std::vector<std::pair<int, int>>> var_occs;
  std::vector<GatePlan> gates;
  std::vector<SinglePlan> singles;
  int bands_col0 = 0;
  int B = 0;
  int R = 0;
  int C = 0;
  int bottom_row0 = 0;
  std::vector<std::vector<OccSite>> sites;
  std::vector<std::pair<int, bool>> filler_seq;
  std::size_t filler_pos = 0;
  std::vector<int> grid;
  int next_park = 0;
  ReductionMap map;

  void normalize() {
    M = phi.num_vars;
    original_clauses = static_cast<int>(phi.clauses.size());
    std::vector<int> uses(M, 0);
    for (const auto& clause : phi.clauses) {
      for (const Literal& lit : clause) ++uses[lit.var];
    }
    for (int v = 0; v < M; ++v) {
      if (uses[v] > 0) continue;
      // A tautology clause gives an unused variable a presence on the board
      // without changing the count of satisfying assignments.
      phi.clauses.push_back({Literal{v, false}, Literal{v, true}, Literal{v, false}});
    }
    N = static_cast<int>(phi.clauses.size());
    var_occs.assign(M, {});
    for (int j = 0; j < N; ++j) {
      for (int s = 0; s < 3; ++s) var_occs[phi.clauses[j][s].var].push_back({j, s});
    }
  }

  void plan_fillers() {
    // Each packing park sits in one band, on the even or odd columns. Walking
    // the bands in rotation keeps parks in consecutive rows two columns apart.
    for (int rep = 0; rep < c; ++rep) {
      for (int i = 1; i <= B; ++i) filler_seq.push_back({i % B, false});
    }
    for (int rep = 0; rep < c; ++rep) {
      for (int i = 1; i <= B; ++i) filler_seq.push_back({i % B, true});
    }
    if (!corner_white) filler_seq.pop_back();
  }

  void plan() {
    corner_white = c == 1 && r == 1;
    B = std::max(2, (3 * N + c - 1) / c);
    int col = 0;
    for (int v = 0; v < M; ++v) {
      int k = static_cast<int>(var_occs[v].size());
      if (corner_white && k == 1) continue;
      gates.push_back({v, k, 0, col, 2 * r * (k + 2), k + 4 + 2 * (c - 1) * (k + 2)});
      col += 2 * r * (k + 2);
    }
    for (int v = 0; v < M; ++v) {
      if (!(corner_white && var_occs[v].size() == 1)) continue;
      singles.push_back({v, 0, col});
      col += 3;
    }
    bands_col0 = col;
    col += 2 * r * B;
    if (corner_white) col += 1;
    C = col;

    int row = 9 * N;
    for (GatePlan& g : gates) {
      g.row0 = row;
      row += g.height;
    }
    for (SinglePlan& s : singles) s.row = row++;
    bottom_row0 = row;
    plan_fillers();
    int leftover = static_cast<int>(filler_seq.size()) - (6 * N - 1);
    if (leftover < 0) throw std::logic_error("band plan is short of packing parks");
    row += leftover + static_cast<int>(singles.size());
    R = row;

    int span = 3 * N + 2 * M + B;
    if (!corner_white && (R != 2 * c * span || C != 2 * r * span)) {
      throw std::logic_error("board dimensions drifted from plan");
    }
    if (c * C != r * R) throw std::logic_error("board shape violates the size law");
    if (static_cast<long long>(R) * C > 64'000'000LL) {
      throw std::invalid_argument("formula too large to embed");
    }

    sites.assign(N, std::vector<OccSite>(3));
    for (const GatePlan& g : gates) {
      for (int j = 0; j < g.k; ++j) {
        auto [clause, slot] = var_occs[g.var][j];
        sites[clause][slot] = {g.row0 + 2 + j, g.col0 + 2 * r * (1 + j), -1};
      }
    }
    for (const SinglePlan& s : singles) {
      auto [clause, slot] = var_occs[s.var][0];
      sites[clause][slot] = {s.row, s.col0, -1};
    }
  }

  void plan_probe(int k) {
    B = 2;
    M = 1;
    N = 0;
    var_occs.assign(1, {});
    for (int j = 0; j < k; ++j) var_occs[0].push_back({-1, -1});
    gates.push_back({0, k, k + 1, 0, 2 * r * (k + 2), k + 4 + 2 * (c - 1) * (k + 2)});
    bands_col0 = 2 * r * (k + 2);
    C = bands_col0 + 2 * r * B;
    bottom_row0 = k + 1 + gates[0].height;
    plan_fillers();
    R = bottom_row0 + static_cast<int>(filler_seq.size());
    if (R != 2 * c * (k + 2 + B) || c * C != r * R) {
      throw std::logic_error("probe dimensions drifted from plan");
    }
  }

  void claim(int row, int col, int park) {
    if (row < 0 || row >= R || col < 0 || col >= C) {
      throw std::logic_error("gadget cell outside the board");
    }
    int& cell = grid[static_cast<std::size_t>(row) * C + col];
    if (cell != -1) throw std::logic_error("gadget cell claimed twice");
    cell = park;
  }

  int filler_park(int row, int col0, int len) {
    int id = next_park++;
    for (int t = 0; t < len; ++t) claim(row, col0 + t, id);
    for (int t = 0; t < len; t += 2) map.fixed_trees.push_back(Cell{row, col0 + t});
    return id;
  }

  void place_band_filler(int row) {
    auto [band, odd] = filler_seq.at(filler_pos++);
    filler_park(row, bands_col0 + 2 * r * band + (odd ? 1 : 0), 2 * r - 1);
  }

  std::vector<int> block_cols(int col0, bool odd) const {
    std::vector<int> cols;
    for (int t = odd ? 1 : 0; t < 2 * r; t += 2) cols.push_back(col0 + t);
    return cols;
  }

  void build_clauses() {
    int row = 1;
    for (int j = 0; j < N; ++j) {
      if (j > 0) place_band_filler(row++);
      std::array<int, 3> order{0, 1, 2};
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sites[j][a].col0 < sites[j][b].col0; });
      ReductionMap::ClauseParks cp;
      cp.sorted_slot = order;
      // u[i]: the columns the clause must cover when literal i holds (the
      // complement of the variable park's tree pattern); s[i]: the other half.
      std::array<std::vector<int>, 3> u;
      std::array<std::vector<int>, 3> s;
      for (int i = 0; i < 3; ++i) {
        const OccSite& site = sites[j][order[i]];
        bool neg = phi.clauses[j][order[i]].negated;
        u[i] = block_cols(site.col0, !neg);
        s[i] = block_cols(site.col0, neg);
        cp.true_side[i] = u[i];
        cp.false_side[i] = s[i];
      }
      int start0 = sites[j][order[0]].col0;
      int start1 = sites[j][order[1]].col0;
      int yf = row;
      int bf = row + 3;
      int rf = row + 6;
      cp.yf = yf;
      cp.bf = bf;
      cp.rf = rf;
      cp.yellow = next_park++;
      for (int t = 0; t < 2 * r; ++t) claim(yf, start0 + t, cp.yellow);
      for (int colx : s[1]) claim(yf, colx, cp.yellow);
      for (int colx = start0; colx <= s[1].back(); ++colx) claim(yf + 1, colx, cp.yellow);
      place_band_filler(yf + 1);
      place_band_filler(yf + 2);
      cp.brown = next_park++;
      for (int t = 0; t < 2 * r; ++t) claim(bf, start1 + t, cp.brown);
      for (int colx : s[2]) claim(bf, colx, cp.brown);
      for (int colx = start1; colx <= s[2].back(); ++colx) claim(bf + 1, colx, cp.brown);
      place_band_filler(bf + 1);
      place_band_filler(bf + 2);
      cp.red = next_park++;
      for (int i = 0; i < 3; ++i) {
        for (int colx : u[i]) claim(rf, colx, cp.red);
      }
      for (int colx = u[0].front(); colx <= u[2].back(); ++colx) claim(rf + 1, colx, cp.red);
      place_band_filler(rf + 1);
      map.clause_parks.push_back(std::move(cp));
      map.boxes.push_back({"clause" + std::to_string(j), yf, start0, 8,
                           sites[j][order[2]].col0 + 2 * r - start0});
      row += 8;
    }
    if (row != 9 * N) throw std::logic_error("clause region height drifted");
  }

  void build_compensators(int k) {
    // One park per occurrence row, locked to the opposite phase of the
    // variable parks so every column of the block receives its trees.
    for (int j = 0; j < k; ++j) {
      int id = next_park++;
      int row = 1 + j;
      int col0 = 2 * r * (1 + j);
      ReductionMap::StatePark sp{0, id, {}, {}};
      for (int t = 0; t < 2 * r; ++t) claim(row, col0 + t, id);
      for (int t = 1; t < 2 * r; t += 2) sp.when_true.push_back(Cell{row, col0 + t});
      for (int t = 0; t < 2 * r; t += 2) sp.when_false.push_back(Cell{row, col0 + t});
      map.state_parks.push_back(std::move(sp));
    }
  }

  void build_gate(const GatePlan& g) {
    int x = g.col0;
    int y = g.row0;
    int k = g.k;
    int L = 2 * r * (k + 1);

    int wire_id = next_park++;
    ReductionMap::StatePark wire{g.var, wire_id, {}, {}};
    claim(y, x + 2 * r - 1, wire_id);
    claim(y + 1, x + 2 * r - 1, wire_id);
    for (int t = 1; t <= 2 * r - 2; ++t) claim(y + 1, x + t, wire_id);
    wire.when_true.push_back(Cell{y, x + 2 * r - 1});
    wire.when_false.push_back(Cell{y + 1, x + 2 * r - 1});
    for (int t = 1; t <= 2 * r - 3; t += 2) {
      wire.when_true.push_back(Cell{y + 1, x + t});
      wire.when_false.push_back(Cell{y + 1, x + t});
    }
    map.state_parks.push_back(std::move(wire));

    int corner_id = next_park++;
    ReductionMap::StatePark corner{g.var, corner_id, {}, {}};
    for (int t = 0; t < 2 * r; ++t) claim(y, x + L + t, corner_id);
    claim(y + 1, x + L + 2 * r - 1, corner_id);
    for (int t = 1; t <= 2 * r - 3; t += 2) {
      corner.when_true.push_back(Cell{y, x + L + t});
    }
    corner.when_true.push_back(Cell{y + 1, x + L + 2 * r - 1});
    for (int t = 0; t <= 2 * r - 2; t += 2) {
      corner.when_false.push_back(Cell{y, x + L + t});
    }
    map.state_parks.push_back(std::move(corner));

    for (int j = 0; j < k; ++j) {
      int value_id = next_park++;
      int row = y + 2 + j;
      int col0 = x + 2 * r * (1 + j);
      ReductionMap::StatePark value{g.var, value_id, {}, {}};
      for (int t = 0; t < 2 * r; ++t) claim(row, col0 + t, value_id);
      for (int t = 0; t < 2 * r; t += 2) value.when_true.push_back(Cell{row, col0 + t});
      for (int t = 1; t < 2 * r; t += 2) value.when_false.push_back(Cell{row, col0 + t});
      map.state_parks.push_back(std::move(value));
      auto [clause, slot] = var_occs[g.var][j];
      if (clause >= 0) sites[clause][slot].park_id = value_id;
    }

    int anchor_id = next_park++;
    ReductionMap::StatePark anchor{g.var, anchor_id, {}, {}};
    for (int t = 0; t < 2 * r; ++t) claim(y + k + 2, x + L + t, anchor_id);
    for (int t = 0; t < 2 * r; t += 2) {
      anchor.when_true.push_back(Cell{y + k + 2, x + L + t});
    }
    for (int t = 1; t < 2 * r; t += 2) {
      anchor.when_false.push_back(Cell{y + k + 2, x + L + t});
    }
    map.state_parks.push_back(std::move(anchor));

    filler_park(y + k + 3, x, 2 * r - 1);
    int row = y + k + 4;
    for (int rep = 0; rep < c - 1; ++rep) {
      for (int j = 0; j < k; ++j) filler_park(row++, x + 2 * r * (1 + j), 2 * r - 1);
      filler_park(row++, x, 2 * r - 1);
      filler_park(row++, x + L, 2 * r - 1);
      filler_park(row++, x + 1, 2 * r - 1);
      for (int j = 0; j < k; ++j) filler_park(row++, x + 2 * r * (1 + j) + 1, 2 * r - 1);
      filler_park(row++, x + L + 1, 2 * r - 1);
    }
    if (row != y + g.height) throw std::logic_error("gate height drifted");
    map.boxes.push_back({"gate" + std::to_string(g.var), y, x, g.height, g.width});
  }

  void build_singles() {
    for (const SinglePlan& s : singles) {
      int id = next_park++;
      claim(s.row, s.col0, id);
      claim(s.row, s.col0 + 1, id);
      map.state_parks.push_back(ReductionMap::StatePark{
          s.var, id, {Cell{s.row, s.col0}}, {Cell{s.row, s.col0 + 1}}});
      auto [clause, slot] = var_occs[s.var][0];
      sites[clause][slot].park_id = id;
      map.boxes.push_back({"single" + std::to_string(s.var), s.row, s.col0, 1, 3});
    }
  }

  void build_white() {
    if (next_park != R - 1) throw std::logic_error("park budget drifted");
    int white = next_park++;
    for (int& cell : grid) {
      if (cell == -1) cell = white;
    }
    if (corner_white) {
      map.fixed_trees.push_back(Cell{0, C - 1});
    } else {
      for (int t = 0; t < r; ++t) {
        map.fixed_trees.push_back(Cell{0, bands_col0 + 1 + 2 * t});
      }
    }
  }

  void build() {
    grid.assign(static_cast<std::size_t>(R) * C, -1);
    if (probe) {
      build_compensators(gates[0].k);
    } else {
      build_clauses();
    }
    for (const GatePlan& g : gates) build_gate(g);
    build_singles();
    int row = bottom_row0;
    while (filler_pos < filler_seq.size()) place_band_filler(row++);
    for (const SinglePlan& s : singles) filler_park(row++, s.col0 + 2, 1);
    if (row != R) throw std::logic_error("row plan incomplete");
    build_white();
  }

  Reduction finish() {
    Reduction out;
    out.puzzle.quota = quota;
    out.puzzle.dims = {R, C};
    out.puzzle.parks = std::move(grid);
    map.quota = quota;
    map.dims = {R, C};
    map.formula = phi;
    map.original_clauses = original_clauses;
    for (int j = 0; j < N; ++j) {
      for (int slot = 0; slot < 3; ++slot) {
        const Literal& lit = phi.clauses[j][slot];
        const OccSite& site = sites[j][slot];
        if (site.park_id < 0) throw std::logic_error("occurrence never placed");
        OccurrenceRef occ;
        occ.var = lit.var;
        occ.clause = j;
        occ.slot = slot;
        occ.negated = lit.negated;
        occ.park_id = site.park_id;
        occ.row = site.row;
        occ.col0 = site.col0;
        occ.true_col = lit.negated ? site.col0 + 1 : site.col0;
        occ.false_col = lit.negated ? site.col0 : site.col0 + 1;
        map.occurrences.push_back(occ);
      }
    }
    map.boxes.push_back({"bands", 0, bands_col0, R, 2 * r * B});
    out.map = std::move(map);
    return out;
  }
};

}  // namespace

Reduction reduce(const CnfFormula& phi, Quota quota) {
  if (quota.c < 1 || quota.r < 1) throw std::invalid_argument("quota must be positive");
  if (phi.num_vars < 1) {
    throw std::invalid_argument("formula needs at least one variable");
  }
  for (const auto& clause : phi.clauses) {
    for (const Literal& lit : clause) {
      if (lit.var < 0 || lit.var >= phi.num_vars) {
        throw std::invalid_argument("literal references a variable outside the formula");
      }
    }
  }
  Builder b;
  b.quota = quota;
  b.c = quota.c;
  b.r = quota.r;
  b.phi = phi;
  b.normalize();
  b.plan();
  b.build();
  return b.finish();
}

Puzzle iff_probe_puzzle(Quota quota, int occurrences) {
  if (quota.c < 1 || quota.r < 1) throw std::invalid_argument("quota must be positive");
  if (occurrences < 1) throw std::invalid_argument("need at least one occurrence");
  Builder b;
  b.quota = quota;
  b.c = quota.c;
  b.r = quota.r;
  b.probe = true;
  b.phi.num_vars = 1;
  b.plan_probe(occurrences);
  b.build();
  return b.finish().puzzle;
}

Certificate assignment_to_certificate(const ReductionMap& map, const Puzzle& puzzle,
                                      const Assignment& a) {
  if (puzzle.dims != map.dims || puzzle.quota != map.quota) {
    throw std::invalid_argument("puzzle does not belong to this map");
  }
  if (static_cast<int>(a.size()) != map.formula.num_vars) {
    throw std::invalid_argument("assignment size disagrees with the formula");
  }
  Certificate cert;
  cert.trees = map.fixed_trees;
  for (const auto& sp : map.state_parks) {
    const auto& cells = a[sp.var] ? sp.when_true : sp.when_false;
    cert.trees.insert(cert.trees.end(), cells.begin(), cells.end());
  }
  for (int j = 0; j < static_cast<int>(map.clause_parks.size()); ++j) {
    const auto& cp = map.clause_parks[j];
    std::array<bool, 3> truth{};
    for (int i = 0; i < 3; ++i) {
      const Literal& lit = map.formula.clauses[j][cp.sorted_slot[i]];
      truth[i] = a[lit.var] != lit.negated;
    }
    // Which block each clause park covers, by truth pattern of the three
    // literals in column order. A park covering block i uses the columns the
    // variable park leaves empty.
    struct Pick {
      int pos;
      bool when_true;
    };
    Pick yellow{}, brown{}, red{};
    int pattern = (truth[0] ? 4 : 0) | (truth[1] ? 2 : 0) | (truth[2] ? 1 : 0);
    switch (pattern) {
      case 7: yellow = {0, true};  brown = {1, true};  red = {2, true}; break;
      case 6: yellow = {0, true};  brown = {2, false}; red = {1, true}; break;
      case 5: yellow = {0, true};  brown = {1, false}; red = {2, true}; break;
      case 4: yellow = {1, false}; brown = {2, false}; red = {0, true}; break;
      case 3: yellow = {0, false}; brown = {1, true};  red = {2, true}; break;
      case 2: yellow = {0, false}; brown = {2, false}; red = {1, true}; break;
      case 1: yellow = {0, false}; brown = {1, false}; red = {2, true}; break;
      default: throw UnsatisfiedClause(j);
    }
    auto add = [&](int row, Pick pick) {
      const auto& cols = pick.when_true ? cp.true_side[pick.pos] : cp.false_side[pick.pos];
      for (int colx : cols) cert.trees.push_back(Cell{row, colx});
    };
    add(cp.yf, yellow);
    add(cp.bf, brown);
    add(cp.rf, red);
  }
  std::sort(cert.trees.begin(), cert.trees.end());
  return cert;
}

Assignment certificate_to_assignment(const ReductionMap& map, const Certificate& cert) {
  std::vector<Cell> trees = cert.trees;
  std::sort(trees.begin(), trees.end());
  auto has_tree = [&](int row, int col) {
    return std::binary_search(trees.begin(), trees.end(), Cell{row, col});
  };
  int width = 2 * map.quota.r;
  Assignment values(map.formula.num_vars, false);
  std::vector<char> seen(map.formula.num_vars, 0);
  for (const OccurrenceRef& occ : map.occurrences) {
    bool evens = true;
    bool odds = true;
    for (int t = 0; t < width; ++t) {
      bool tree = has_tree(occ.row, occ.col0 + t);
      if (tree != (t % 2 == 0)) evens = false;
      if (tree != (t % 2 == 1)) odds = false;
    }
    bool value;
    if (evens && !odds) {
      value = true;
    } else if (odds && !evens) {
      value = false;
    } else {
      throw AmbiguousPark(occ.park_id);
    }
    if (seen[occ.var] && values[occ.var] != value) {
      throw InconsistentOccurrences(occ.var);
    }
    seen[occ.var] = 1;
    values[occ.var] = value;
  }
  for (int v = 0; v < map.formula.num_vars; ++v) {
    if (!seen[v]) throw InconsistentOccurrences(v);
  }
  return values;
}

std::string serialize_map(const ReductionMap& map) {
  std::ostringstream out;
  out << "parksmap v1\n";
  out << "quota " << map.quota.c << ' ' << map.quota.r << '\n';
  out << "dims " << map.dims.m << ' ' << map.dims.n << '\n';
  out << "vars " << map.formula.num_vars << '\n';
  out << "clauses " << map.formula.clauses.size() << ' ' << map.original_clauses << '\n';
  for (const OccurrenceRef& occ : map.occurrences) {
    out << "occ " << occ.var << ' ' << occ.clause << ' ' << occ.slot << ' '
        << (occ.negated ? 1 : 0) << ' ' << occ.park_id << ' ' << occ.row << ' '
        << occ.col0 << ' ' << occ.true_col << ' ' << occ.false_col << '\n';
  }
  for (const GadgetBox& box : map.boxes) {
    out << "box " << box.name << ' ' << box.row0 << ' ' << box.col0 << ' ' << box.rows
        << ' ' << box.cols << '\n';
  }
  return out.str();
}

}  // namespace parks
