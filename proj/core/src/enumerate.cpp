#include "parks/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "parks/errors.hpp"

namespace parks {

int thread_budget() {
  const char* env = std::getenv("PARKS_THREADS");
  if (env && *env) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::uint64_t> row_masks(int n, int r) {
  if (n < 0 || n > 64) {
    throw std::invalid_argument("row width must be 0..64");
  }
  if (r < 0) {
    throw std::invalid_argument("tree count must be nonnegative");
  }
  std::vector<std::uint64_t> out;
  if (r == 0) {
    out.push_back(0);
    return out;
  }
  // Place set bits left to right with a gap of at least one clear bit.
  std::vector<int> pos;
  auto rec = [&](auto&& self, int next, int left) -> void {
    if (left == 0) {
      std::uint64_t mask = 0;
      for (int b : pos) mask |= std::uint64_t(1) << b;
      out.push_back(mask);
      return;
    }
    for (int b = next; b + 2 * (left - 1) <= n - 1; ++b) {
      pos.push_back(b);
      self(self, b + 2, left - 1);
      pos.pop_back();
    }
  };
  rec(rec, 0, r);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DpKey {
  std::uint64_t mask;
  std::uint64_t rem;
  bool operator==(const DpKey&) const = default;
};

struct DpKeyHash {
  std::size_t operator()(const DpKey& k) const {
    std::uint64_t h = k.mask * 0x9e3779b97f4a7c15ull;
    h ^= k.rem + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

constexpr std::size_t kBytesPerState = 112;

// Positional packing of the per-column remaining quotas in base (c+1).
// Returns false if (c+1)^n does not fit in 64 bits.
bool make_pows(int n, int c, std::vector<std::uint64_t>& pows) {
  pows.assign(static_cast<std::size_t>(n) + 1, 1);
  for (int j = 0; j < n; ++j) {
    std::uint64_t next = pows[static_cast<std::size_t>(j)] *
                         static_cast<std::uint64_t>(c + 1);
    if (next / static_cast<std::uint64_t>(c + 1) !=
        pows[static_cast<std::size_t>(j)]) {
      return false;
    }
    pows[static_cast<std::size_t>(j) + 1] = next;
  }
  return true;
}

struct Deadline {
  std::chrono::steady_clock::time_point at;
  bool armed = false;

  void check() const {
    if (armed && std::chrono::steady_clock::now() > at) {
      throw DeadlineExceeded();
    }
  }
};

using StateMap = std::unordered_map<DpKey, mpz_class, DpKeyHash>;

mpz_class dp_count(int m, int n, int c,
                   const std::vector<std::uint64_t>& masks,
                   const std::vector<std::uint64_t>& first_masks,
                   const std::vector<std::uint64_t>& pows,
                   std::size_t budget_bytes, const Deadline& deadline) {
  const std::uint64_t width_mask =
      n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  std::uint64_t full_rem = 0;
  for (int j = 0; j < n; ++j) {
    full_rem += pows[static_cast<std::size_t>(j)] * static_cast<std::uint64_t>(c);
  }

  StateMap cur;
  cur.emplace(DpKey{0, full_rem}, 1);
  int rem_digits[64];

  for (int row = 0; row < m; ++row) {
    StateMap next;
    const int rows_left_before = m - row;
    const std::vector<std::uint64_t>& choices = row == 0 ? first_masks : masks;
    std::size_t ticks = 0;
    for (const auto& [key, ways] : cur) {
      std::uint64_t required = 0;
      for (int j = 0; j < n; ++j) {
        rem_digits[j] = static_cast<int>(
            key.rem / pows[static_cast<std::size_t>(j)] %
            static_cast<std::uint64_t>(c + 1));
        if (rem_digits[j] == rows_left_before) {
          required |= std::uint64_t(1) << j;
        }
      }
      std::uint64_t blocked =
          (key.mask | (key.mask << 1) | (key.mask >> 1)) & width_mask;
      for (std::uint64_t mask : choices) {
        if ((mask & blocked) != 0) continue;
        if ((required & ~mask) != 0) continue;
        std::uint64_t delta = 0;
        bool ok = true;
        for (std::uint64_t bits = mask; bits;) {
          int j = std::countr_zero(bits);
          bits &= bits - 1;
          if (rem_digits[j] == 0) {
            ok = false;
            break;
          }
          delta += pows[static_cast<std::size_t>(j)];
        }
        if (!ok) continue;
        next[DpKey{mask, key.rem - delta}] += ways;
        if ((++ticks & 0xfff) == 0) {
          deadline.check();
          if (next.size() * kBytesPerState > budget_bytes) {
            throw MemoryBudgetExceeded(next.size() * kBytesPerState);
          }
        }
      }
    }
    deadline.check();
    if (next.size() * kBytesPerState > budget_bytes) {
      throw MemoryBudgetExceeded(next.size() * kBytesPerState);
    }
    cur = std::move(next);
  }

  mpz_class total = 0;
  for (const auto& [key, ways] : cur) {
    if (key.rem == 0) total += ways;
  }
  return total;
}

}  // namespace

ConfigCount count_configs(Quota quota, BoardDims dims,
                          const EnumerateOptions& opts) {
  if (quota.c < 1 || quota.r < 1) {
    throw std::invalid_argument("quotas must be positive");
  }
  ConfigCount result{quota, dims, 0};
  long long lhs = static_cast<long long>(quota.c) * dims.n;
  long long rhs = static_cast<long long>(quota.r) * dims.m;
  if (dims.m < 0 || dims.n < 0 || lhs != rhs) {
    return result;
  }
  if (dims.m == 0) {
    result.count = 1;
    return result;
  }

  // Transposing the board swaps the roles of rows and columns without
  // changing the count, so run whichever orientation has the smaller row
  // mask table, falling back to the other when (c+1)^n overflows the
  // quota packing.
  auto mask_table_size = [](int n, int r) -> std::uint64_t {
    if (n > 64) return ~std::uint64_t(0);
    std::uint64_t result = 1;
    int a = n - r + 1;
    if (a < 0 || r > a) return 0;
    for (int i = 1; i <= r; ++i) {
      result = result * static_cast<std::uint64_t>(a - r + i) /
               static_cast<std::uint64_t>(i);
    }
    return result;
  };
  int m = dims.m, n = dims.n, c = quota.c, r = quota.r;
  bool prefer_flip =
      mask_table_size(dims.m, quota.c) < mask_table_size(dims.n, quota.r);
  std::vector<std::uint64_t> pows;
  bool fits = false;
  for (int attempt = 0; attempt < 2 && !fits; ++attempt) {
    if (attempt == 1 || prefer_flip) {
      std::swap(m, n);
      std::swap(c, r);
    }
    fits = n <= 64 && make_pows(n, c, pows);
  }
  if (!fits) {
    throw std::invalid_argument("board too wide in both orientations");
  }

  Deadline deadline;
  if (opts.deadline) {
    deadline.at = std::chrono::steady_clock::now() + *opts.deadline;
    deadline.armed = true;
  }

  auto masks = row_masks(n, r);
  int threads = opts.threads > 0 ? opts.threads : thread_budget();
  threads = std::min<int>(threads, static_cast<int>(masks.size()));

  if (threads <= 1 || m < 2) {
    result.count =
        dp_count(m, n, c, masks, masks, pows, opts.memory_budget_bytes, deadline);
    return result;
  }

  // Partition the first row's mask choices; exact sums merge determinately.
  std::vector<mpz_class> partial(static_cast<std::size_t>(threads), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  std::size_t per_thread_budget =
      opts.memory_budget_bytes / static_cast<std::size_t>(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        std::vector<std::uint64_t> first;
        for (std::size_t i = static_cast<std::size_t>(t); i < masks.size();
             i += static_cast<std::size_t>(threads)) {
          first.push_back(masks[i]);
        }
        partial[static_cast<std::size_t>(t)] =
            dp_count(m, n, c, masks, first, pows, per_thread_budget, deadline);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  for (const auto& part : partial) result.count += part;
  return result;
}

std::vector<Certificate> list_configs(Quota quota, BoardDims dims,
                                      std::uint64_t cap) {
  if (quota.c < 1 || quota.r < 1) {
    throw std::invalid_argument("quotas must be positive");
  }
  std::vector<Certificate> out;
  long long lhs = static_cast<long long>(quota.c) * dims.n;
  long long rhs = static_cast<long long>(quota.r) * dims.m;
  if (dims.m < 0 || dims.n < 0 || lhs != rhs) {
    return out;
  }
  if (dims.m == 0) {
    out.push_back(Certificate{});
    if (out.size() > cap) throw CapExceeded(cap);
    return out;
  }
  if (dims.n > 64) {
    throw std::invalid_argument("listing requires width at most 64");
  }

  const int m = dims.m, n = dims.n, c = quota.c, r = quota.r;
  const std::uint64_t width_mask =
      n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  auto masks = row_masks(n, r);
  std::vector<int> rem(static_cast<std::size_t>(n), c);
  std::vector<std::uint64_t> chosen(static_cast<std::size_t>(m), 0);

  auto rec = [&](auto&& self, int row, std::uint64_t prev) -> void {
    if (row == m) {
      for (int j = 0; j < n; ++j) {
        if (rem[static_cast<std::size_t>(j)] != 0) return;
      }
      Certificate cert;
      for (int i = 0; i < m; ++i) {
        for (std::uint64_t bits = chosen[static_cast<std::size_t>(i)]; bits;) {
          int j = std::countr_zero(bits);
          bits &= bits - 1;
          cert.trees.push_back(Cell{i, j});
        }
      }
      std::sort(cert.trees.begin(), cert.trees.end());
      out.push_back(std::move(cert));
      if (out.size() > cap) throw CapExceeded(cap);
      return;
    }
    const int rows_left = m - row;
    std::uint64_t blocked = (prev | (prev << 1) | (prev >> 1)) & width_mask;
    std::uint64_t required = 0;
    for (int j = 0; j < n; ++j) {
      if (rem[static_cast<std::size_t>(j)] == rows_left) {
        required |= std::uint64_t(1) << j;
      }
    }
    for (std::uint64_t mask : masks) {
      if ((mask & blocked) != 0 || (required & ~mask) != 0) continue;
      bool ok = true;
      for (std::uint64_t bits = mask; bits;) {
        int j = std::countr_zero(bits);
        bits &= bits - 1;
        if (rem[static_cast<std::size_t>(j)] == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::uint64_t bits = mask; bits;) {
        int j = std::countr_zero(bits);
        bits &= bits - 1;
        --rem[static_cast<std::size_t>(j)];
      }
      chosen[static_cast<std::size_t>(row)] = mask;
      self(self, row + 1, mask);
      chosen[static_cast<std::size_t>(row)] = 0;
      for (std::uint64_t bits = mask; bits;) {
        int j = std::countr_zero(bits);
        bits &= bits - 1;
        ++rem[static_cast<std::size_t>(j)];
      }
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Certificate shuriken(Quota quota, ShurikenSide side) {
  const int c = quota.c, r = quota.r;
  Certificate cert;
  // Box (i, j) covers rows 2i..2i+1 and cols 2j..2j+1. Quadrant corners for
  // the Left side; the Right side is its vertical mirror.
  for (int i = 0; i < 2 * c; ++i) {
    for (int j = 0; j < 2 * r; ++j) {
      bool top_half = i < c;
      bool left_half = j < r;
      int dr, dc;
      if (side == ShurikenSide::Left) {
        if (top_half && left_half) { dr = 0; dc = 1; }        // top-right
        else if (top_half && !left_half) { dr = 1; dc = 1; }  // bottom-right
        else if (!top_half && left_half) { dr = 0; dc = 0; }  // top-left
        else { dr = 1; dc = 0; }                              // bottom-left
      } else {
        if (top_half && left_half) { dr = 1; dc = 0; }
        else if (top_half && !left_half) { dr = 0; dc = 0; }
        else if (!top_half && left_half) { dr = 1; dc = 1; }
        else { dr = 0; dc = 1; }
      }
      cert.trees.push_back(Cell{2 * i + dr, 2 * j + dc});
    }
  }
  std::sort(cert.trees.begin(), cert.trees.end());
  return cert;
}

}  // namespace parks
