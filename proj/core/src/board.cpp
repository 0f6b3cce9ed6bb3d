#include "parks/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace parks {

namespace {

// Splits text into lines, requiring every line to end with '\n'.
std::vector<std::string> split_lines(const std::string& text, ParseError::Kind kind) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      throw ParseError(kind, "missing trailing newline");
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

bool parse_int_token(const std::string& token, long& out) {
  if (token.empty()) return false;
  std::size_t i = token[0] == '-' ? 1 : 0;
  if (i == token.size()) return false;
  for (; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
  }
  errno = 0;
  char* end = nullptr;
  out = std::strtol(token.c_str(), &end, 10);
  return errno == 0 && end == token.c_str() + token.size();
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) fields.push_back(tok);
  return fields;
}

}  // namespace

bool kings_adjacent(Cell a, Cell b) {
  if (a == b) return false;
  int dr = a.row - b.row;
  int dc = a.col - b.col;
  return dr >= -1 && dr <= 1 && dc >= -1 && dc <= 1;
}

BoardDims valid_sizes(Quota quota, int i) {
  int g = std::gcd(quota.c, quota.r);
  return BoardDims{quota.c / g * i, quota.r / g * i};
}

Puzzle parse_puzzle(const std::string& text) {
  auto lines = split_lines(text, ParseError::Kind::TruncatedGrid);
  if (lines.empty() || lines[0] != "parks v1") {
    throw ParseError(ParseError::Kind::MalformedHeader, "expected \"parks v1\"");
  }
  if (lines.size() < 2) {
    throw ParseError(ParseError::Kind::MalformedHeader, "missing dimensions line");
  }
  auto header = split_fields(lines[1]);
  long c, r, m, n;
  if (header.size() != 4 || !parse_int_token(header[0], c) ||
      !parse_int_token(header[1], r) || !parse_int_token(header[2], m) ||
      !parse_int_token(header[3], n)) {
    throw ParseError(ParseError::Kind::MalformedHeader,
                     "dimensions line must be \"c r m n\"");
  }
  if (c < 1 || r < 1 || m < 0 || n < 0) {
    throw ParseError(ParseError::Kind::MalformedHeader,
                     "quotas must be positive and dimensions nonnegative");
  }
  if (c * n != r * m) {
    throw ParseError(ParseError::Kind::DimensionMismatch,
                     "c*n != r*m for the given header");
  }

  Puzzle p;
  p.quota = Quota{static_cast<int>(c), static_cast<int>(r)};
  p.dims = BoardDims{static_cast<int>(m), static_cast<int>(n)};
  p.parks.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));

  if (lines.size() < 2 + static_cast<std::size_t>(m)) {
    throw ParseError(ParseError::Kind::TruncatedGrid, "fewer grid rows than m");
  }
  if (lines.size() > 2 + static_cast<std::size_t>(m)) {
    throw ParseError(ParseError::Kind::TrailingData, "content after the grid");
  }
  for (long row = 0; row < m; ++row) {
    auto fields = split_fields(lines[2 + row]);
    if (fields.size() < static_cast<std::size_t>(n)) {
      throw ParseError(ParseError::Kind::TruncatedGrid,
                       "grid row " + std::to_string(row) + " has fewer than n ids");
    }
    if (fields.size() > static_cast<std::size_t>(n)) {
      throw ParseError(ParseError::Kind::TrailingData,
                       "grid row " + std::to_string(row) + " has more than n ids");
    }
    for (const auto& field : fields) {
      long id;
      if (!parse_int_token(field, id)) {
        throw ParseError(ParseError::Kind::MalformedGrid,
                         "park id \"" + field + "\" is not an integer");
      }
      if (id < 0 || id >= m) {
        throw ParseError(ParseError::Kind::BadParkId,
                         "park id " + std::to_string(id) + " outside 0.." +
                             std::to_string(m - 1));
      }
      p.parks.push_back(static_cast<int>(id));
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int id : p.parks) seen[static_cast<std::size_t>(id)] = 1;
  for (long id = 0; id < m; ++id) {
    if (!seen[static_cast<std::size_t>(id)]) {
      throw ParseError(ParseError::Kind::WrongParkCount,
                       "park " + std::to_string(id) + " has no cells");
    }
  }
  return p;
}

std::string serialize_puzzle(const Puzzle& p) {
  std::string out = "parks v1\n";
  out += std::to_string(p.quota.c) + " " + std::to_string(p.quota.r) + " " +
         std::to_string(p.dims.m) + " " + std::to_string(p.dims.n) + "\n";
  for (int row = 0; row < p.dims.m; ++row) {
    for (int col = 0; col < p.dims.n; ++col) {
      if (col) out += ' ';
      out += std::to_string(p.park_at(row, col));
    }
    out += '\n';
  }
  return out;
}

Certificate parse_certificate(const std::string& text) {
  auto lines = split_lines(text, ParseError::Kind::MalformedLine);
  Certificate cert;
  cert.trees.reserve(lines.size());
  for (const auto& line : lines) {
    auto fields = split_fields(line);
    long row, col;
    if (fields.size() != 2 || !parse_int_token(fields[0], row) ||
        !parse_int_token(fields[1], col)) {
      throw ParseError(ParseError::Kind::MalformedLine,
                       "expected \"row col\", got \"" + line + "\"");
    }
    cert.trees.push_back(Cell{static_cast<int>(row), static_cast<int>(col)});
  }
  std::sort(cert.trees.begin(), cert.trees.end());
  auto dup = std::adjacent_find(cert.trees.begin(), cert.trees.end());
  if (dup != cert.trees.end()) {
    throw ParseError(ParseError::Kind::DuplicateCell,
                     "cell (" + std::to_string(dup->row) + "," +
                         std::to_string(dup->col) + ") listed twice");
  }
  return cert;
}

std::string serialize_certificate(const Certificate& cert) {
  std::string out;
  for (const Cell& cell : cert.trees) {
    out += std::to_string(cell.row) + " " + std::to_string(cell.col) + "\n";
  }
  return out;
}

bool is_contiguous(const Puzzle& p) {
  const int m = p.dims.m;
  const int n = p.dims.n;
  if (m == 0) return true;
  std::vector<char> visited(p.parks.size(), 0);
  int components = 0;
  std::vector<int> stack;
  for (std::size_t start = 0; start < p.parks.size(); ++start) {
    if (visited[start]) continue;
    ++components;
    if (components > m) return false;
    int id = p.parks[start];
    visited[start] = 1;
    stack.push_back(static_cast<int>(start));
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      int row = cur / n;
      int col = cur % n;
      const int dr[4] = {-1, 1, 0, 0};
      const int dc[4] = {0, 0, -1, 1};
      for (int d = 0; d < 4; ++d) {
        int nr = row + dr[d];
        int nc = col + dc[d];
        if (nr < 0 || nr >= m || nc < 0 || nc >= n) continue;
        int next = nr * n + nc;
        if (!visited[next] && p.parks[next] == id) {
          visited[next] = 1;
          stack.push_back(next);
        }
      }
    }
  }
  return components == m;
}

Puzzle canonical_relabel(const Puzzle& p) {
  Puzzle out = p;
  std::vector<int> relabel(static_cast<std::size_t>(p.dims.m), -1);
  int next = 0;
  for (int& id : out.parks) {
    if (relabel[static_cast<std::size_t>(id)] < 0) {
      relabel[static_cast<std::size_t>(id)] = next++;
    }
    id = relabel[static_cast<std::size_t>(id)];
  }
  return out;
}

std::string violation_to_string(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::ColumnCount:
      return "column-count " + std::to_string(v.index);
    case ViolationKind::RowCount:
      return "row-count " + std::to_string(v.index);
    case ViolationKind::ParkCount:
      return "park-count " + std::to_string(v.index);
    case ViolationKind::Adjacency:
      return "adjacency " + std::to_string(v.a.row) + " " +
             std::to_string(v.a.col) + " " + std::to_string(v.b.row) + " " +
             std::to_string(v.b.col);
    case ViolationKind::OutOfBounds:
      return "out-of-bounds " + std::to_string(v.a.row) + " " +
             std::to_string(v.a.col);
    case ViolationKind::Duplicate:
      return "duplicate " + std::to_string(v.a.row) + " " +
             std::to_string(v.a.col);
  }
  return "unknown";
}

}  // namespace parks
