#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "parks/board.hpp"
#include "parks/errors.hpp"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(PARKS_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

parks::ParseError::Kind parse_kind(const std::string& text) {
  try {
    parks::parse_puzzle(text);
  } catch (const parks::ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return parks::ParseError::Kind::MalformedHeader;
}

parks::ParseError::Kind cert_kind(const std::string& text) {
  try {
    parks::parse_certificate(text);
  } catch (const parks::ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return parks::ParseError::Kind::MalformedHeader;
}

}  // namespace

TEST_CASE("kings adjacency") {
  parks::Cell center{3, 3};
  int adjacent = 0;
  for (int row = 0; row <= 6; ++row) {
    for (int col = 0; col <= 6; ++col) {
      parks::Cell other{row, col};
      bool expect = other != center && std::abs(row - 3) <= 1 && std::abs(col - 3) <= 1;
      CHECK(parks::kings_adjacent(center, other) == expect);
      CHECK(parks::kings_adjacent(other, center) == expect);
      adjacent += parks::kings_adjacent(center, other);
    }
  }
  CHECK(adjacent == 8);
  CHECK_FALSE(parks::kings_adjacent(center, center));
}

TEST_CASE("valid board sizes") {
  CHECK(parks::valid_sizes(parks::Quota{1, 1}, 5) == parks::BoardDims{5, 5});
  CHECK(parks::valid_sizes(parks::Quota{1, 2}, 3) == parks::BoardDims{3, 6});
  CHECK(parks::valid_sizes(parks::Quota{2, 4}, 3) == parks::BoardDims{3, 6});
  CHECK(parks::valid_sizes(parks::Quota{3, 2}, 2) == parks::BoardDims{6, 4});
  CHECK(parks::valid_sizes(parks::Quota{2, 2}, 1) == parks::BoardDims{1, 1});
  for (int i = 0; i <= 6; ++i) {
    parks::BoardDims dims = parks::valid_sizes(parks::Quota{3, 2}, i);
    CHECK(3 * dims.n == 2 * dims.m);
  }
}

TEST_CASE("puzzle parsing round-trips") {
  std::string text = slurp("one_tree_6x6.parks");
  parks::Puzzle p = parks::parse_puzzle(text);
  CHECK(p.quota == parks::Quota{1, 1});
  CHECK(p.dims == parks::BoardDims{6, 6});
  CHECK(p.parks.size() == 36);
  CHECK(p.park_at(0, 0) == 0);
  CHECK(p.park_at(1, 5) == 2);
  CHECK(p.park_at(5, 3) == 4);
  CHECK(parks::serialize_puzzle(p) == text);
  CHECK(parks::parse_puzzle(parks::serialize_puzzle(p)) == p);
}

TEST_CASE("puzzle parse errors") {
  using Kind = parks::ParseError::Kind;
  CHECK(parse_kind("") == Kind::MalformedHeader);
  CHECK(parse_kind("parks v2\n1 1 1 1\n0\n") == Kind::MalformedHeader);
  CHECK(parse_kind("parks v1\n1 1 1\n0\n") == Kind::MalformedHeader);
  CHECK(parse_kind("parks v1\n0 1 1 1\n0\n") == Kind::MalformedHeader);
  CHECK(parse_kind("parks v1\n1 1 -1 1\n") == Kind::MalformedHeader);
  CHECK(parse_kind("parks v1\n1 2 2 2\n0 0\n1 1\n") == Kind::DimensionMismatch);
  CHECK(parse_kind("parks v1\n1 1 2 2\n0 0\n") == Kind::TruncatedGrid);
  CHECK(parse_kind("parks v1\n1 1 2 2\n0 0\n1 1\n1 1\n") == Kind::TrailingData);
  CHECK(parse_kind("parks v1\n1 1 2 2\n0\n1 1\n") == Kind::TruncatedGrid);
  CHECK(parse_kind("parks v1\n1 1 2 2\n0 0 0\n1 1\n") == Kind::TrailingData);
  CHECK(parse_kind("parks v1\n1 1 2 2\n0 x\n1 1\n") == Kind::MalformedGrid);
  CHECK(parse_kind("parks v1\n1 1 2 2\n0 0\n1 2\n") == Kind::BadParkId);
  CHECK(parse_kind("parks v1\n1 1 2 2\n0 0\n0 0\n") == Kind::WrongParkCount);
  CHECK(parse_kind("parks v1\n1 1 2 2\n0 0\n1 1") == Kind::TruncatedGrid);
}

TEST_CASE("degenerate empty board") {
  parks::Puzzle p = parks::parse_puzzle("parks v1\n1 1 0 0\n");
  CHECK(p.dims == parks::BoardDims{0, 0});
  CHECK(p.parks.empty());
  CHECK(parks::serialize_puzzle(p) == "parks v1\n1 1 0 0\n");
}

TEST_CASE("certificate parsing") {
  std::string text = slurp("one_tree_6x6.cert");
  parks::Certificate cert = parks::parse_certificate(text);
  CHECK(cert.trees.size() == 6);
  CHECK(cert.trees.front() == parks::Cell{0, 0});
  CHECK(cert.trees.back() == parks::Cell{5, 2});
  CHECK(parks::serialize_certificate(cert) == text);

  parks::Certificate scrambled = parks::parse_certificate("4 4\n0 0\n2 -3\n");
  CHECK(scrambled.trees[0] == parks::Cell{0, 0});
  CHECK(scrambled.trees[1] == parks::Cell{2, -3});
  CHECK(scrambled.trees[2] == parks::Cell{4, 4});

  CHECK(parks::parse_certificate("").trees.empty());

  using Kind = parks::ParseError::Kind;
  CHECK(cert_kind("1\n") == Kind::MalformedLine);
  CHECK(cert_kind("1 2 3\n") == Kind::MalformedLine);
  CHECK(cert_kind("1 b\n") == Kind::MalformedLine);
  CHECK(cert_kind("1 2") == Kind::MalformedLine);
  CHECK(cert_kind("1 2\n1 2\n") == Kind::DuplicateCell);
}

TEST_CASE("contiguity predicate") {
  parks::Puzzle p = parks::parse_puzzle(slurp("one_tree_6x6.parks"));
  CHECK(parks::is_contiguous(p));

  parks::Puzzle split;
  split.quota = parks::Quota{1, 1};
  split.dims = parks::BoardDims{2, 2};
  split.parks = {0, 1, 1, 0};
  CHECK_FALSE(parks::is_contiguous(split));

  parks::Puzzle empty;
  empty.quota = parks::Quota{1, 1};
  empty.dims = parks::BoardDims{0, 0};
  CHECK(parks::is_contiguous(empty));
}

TEST_CASE("canonical relabeling") {
  parks::Puzzle p;
  p.quota = parks::Quota{1, 1};
  p.dims = parks::BoardDims{2, 2};
  p.parks = {1, 0, 0, 1};
  parks::Puzzle canon = parks::canonical_relabel(p);
  CHECK(canon.parks == std::vector<int>{0, 1, 1, 0});
  CHECK(parks::canonical_relabel(canon) == canon);
}

TEST_CASE("violation rendering") {
  using parks::Violation;
  using parks::ViolationKind;
  CHECK(parks::violation_to_string(Violation{ViolationKind::ColumnCount, 3, {}, {}}) ==
        "column-count 3");
  CHECK(parks::violation_to_string(Violation{ViolationKind::RowCount, 0, {}, {}}) ==
        "row-count 0");
  CHECK(parks::violation_to_string(Violation{ViolationKind::ParkCount, 7, {}, {}}) ==
        "park-count 7");
  CHECK(parks::violation_to_string(
            Violation{ViolationKind::Adjacency, -1, {1, 2}, {2, 3}}) ==
        "adjacency 1 2 2 3");
  CHECK(parks::violation_to_string(
            Violation{ViolationKind::OutOfBounds, -1, {-1, 4}, {}}) ==
        "out-of-bounds -1 4");
  CHECK(parks::violation_to_string(Violation{ViolationKind::Duplicate, -1, {0, 0}, {}}) ==
        "duplicate 0 0");
}
