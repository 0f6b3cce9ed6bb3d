#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "parks/board.hpp"

namespace parks {

struct ConfigCount {
  Quota quota;
  BoardDims dims;
  mpz_class count;
};

// All width-n bit masks with exactly r set bits and no two set bits in
// adjacent columns, sorted ascending. Requires n <= 64.
std::vector<std::uint64_t> row_masks(int n, int r);

struct EnumerateOptions {
  std::optional<std::chrono::milliseconds> deadline;
  std::size_t memory_budget_bytes = std::size_t(2) << 30;
  int threads = 0;  // 0 = PARKS_THREADS, which defaults to hardware threads
};

// Exact count of tree configurations with c per column, r per row, and no
// two trees kings-adjacent; parks play no role. Row-by-row DP over
// (previous mask, per-column remaining quota) states.
ConfigCount count_configs(Quota quota, BoardDims dims,
                          const EnumerateOptions& opts = {});

// The configurations themselves, canonically sorted. Throws CapExceeded if
// there are more than cap of them.
std::vector<Certificate> list_configs(Quota quota, BoardDims dims,
                                      std::uint64_t cap);

enum class ShurikenSide { Left, Right };

// One of the two tree configurations on the minimal 4c x 4r board: the board
// splits into 2x2 boxes and each quadrant of boxes uses one corner uniformly.
Certificate shuriken(Quota quota, ShurikenSide side);

// Thread budget used by parallel operations: PARKS_THREADS when set and
// positive, otherwise the hardware concurrency.
int thread_budget();

}  // namespace parks
