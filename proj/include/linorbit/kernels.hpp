#pragma once

// Exhaustive scanners over 0/1 vectors. Each has a serial reference kept for
// testing and an OpenMP version; both return the lexicographically first
// feasible vector (entry 0 most significant, 0 before 1).
//
// A vector over n entries is addressed by its rank r in [0, 2^n):
// entry i is bit (n - 1 - i) of r.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "linorbit/binary_program.hpp"

namespace linorbit::kernels {

inline bool rank_bit(std::uint64_t rank, std::size_t n, std::size_t i) {
  return ((rank >> (n - 1 - i)) & 1u) != 0;
}

std::vector<std::uint8_t> rank_to_vector(std::uint64_t rank, std::size_t n);
std::vector<std::size_t> rank_to_indices(std::uint64_t rank, std::size_t n);

template <class Pred>
std::optional<std::uint64_t> first_rank_serial(std::size_t n, Pred&& pred) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (pred(r)) return r;
  }
  return std::nullopt;
}

// Blocks of 2^12 ranks are scanned in parallel; a block is skipped once a
// smaller feasible rank is known. `pred` must be safe to call concurrently.
template <class Pred>
std::optional<std::uint64_t> first_rank_parallel(std::size_t n, Pred&& pred) {
  constexpr std::size_t kBlockBits = 12;
  if (n <= kBlockBits) return first_rank_serial(n, pred);
  const std::uint64_t block = std::uint64_t{1} << kBlockBits;
  const std::int64_t blocks = std::int64_t{1} << (n - kBlockBits);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t start = static_cast<std::uint64_t>(b) * block;
    if (start > best.load(std::memory_order_relaxed)) continue;
    for (std::uint64_t r = start; r < start + block; ++r) {
      if (pred(r)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
        break;
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

// 0-1 program with 64-bit coefficients and each row's relation folded into
// an admissible LHS interval [lo, hi].
struct DenseProgram {
  struct Entry {
    std::size_t index;  // variable (in rows) or row (in columns)
    std::int64_t coef;
  };

  std::size_t num_vars = 0;
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  std::vector<std::vector<Entry>> rows;
  std::vector<std::vector<Entry>> columns;

  std::size_t num_rows() const { return rows.size(); }

  // nullopt when some row's partial sums could leave the 62-bit range.
  static std::optional<DenseProgram> compile(const BinaryProgram& program);
};

// Evaluates every row from scratch for each rank in increasing order.
std::optional<std::uint64_t> first_feasible_reference(const DenseProgram& p);

// Splits the variables into a high prefix, scanned block-by-block in
// parallel, and a low suffix walked in Gray-code order with incremental row
// sums. Each block reports its smallest feasible suffix.
std::optional<std::uint64_t> first_feasible_parallel(const DenseProgram& p);

}  // namespace linorbit::kernels
