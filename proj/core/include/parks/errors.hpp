#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parks {

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedHeader,
    DimensionMismatch,
    BadParkId,
    WrongParkCount,
    TruncatedGrid,
    MalformedGrid,
    TrailingData,
    MalformedLine,
    DuplicateCell,
    MalformedDimacs,
    ClauseTooLong,
    EmptyClause,
  };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

class MemoryBudgetExceeded : public std::runtime_error {
 public:
  explicit MemoryBudgetExceeded(std::size_t bytes)
      : std::runtime_error("state table would exceed memory budget"),
        bytes_(bytes) {}

  std::size_t bytes() const { return bytes_; }

 private:
  std::size_t bytes_;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::uint64_t cap)
      : std::runtime_error("result count exceeds cap"), cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

class UnsatisfiedClause : public std::runtime_error {
 public:
  explicit UnsatisfiedClause(int clause_index)
      : std::runtime_error("assignment falsifies clause " +
                           std::to_string(clause_index)),
        clause_index_(clause_index) {}

  int clause_index() const { return clause_index_; }

 private:
  int clause_index_;
};

class InconsistentOccurrences : public std::runtime_error {
 public:
  explicit InconsistentOccurrences(int var)
      : std::runtime_error("occurrences of variable " + std::to_string(var) +
                           " disagree"),
        var_(var) {}

  int var() const { return var_; }

 private:
  int var_;
};

class AmbiguousPark : public std::runtime_error {
 public:
  explicit AmbiguousPark(int park_id)
      : std::runtime_error("park " + std::to_string(park_id) +
                           " holds neither legal pattern"),
        park_id_(park_id) {}

  int park_id() const { return park_id_; }

 private:
  int park_id_;
};

}  // namespace parks
