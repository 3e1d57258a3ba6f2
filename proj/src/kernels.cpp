#include "linorbit/kernels.hpp"

#include <algorithm>
#include <bit>

namespace linorbit::kernels {
namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 62;
constexpr std::size_t kSuffixBits = 16;

std::int64_t clamp_bound(const BigInt& v) {
  if (v > kLimit) return kLimit;
  if (v < -kLimit) return -kLimit;
  return static_cast<std::int64_t>(v);
}

bool in_range(const DenseProgram& p, std::size_t row, std::int64_t sum) {
  return p.lo[row] <= sum && sum <= p.hi[row];
}

}  // namespace

std::vector<std::uint8_t> rank_to_vector(std::uint64_t rank, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rank_bit(rank, n, i) ? 1 : 0;
  return out;
}

std::vector<std::size_t> rank_to_indices(std::uint64_t rank, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank_bit(rank, n, i)) out.push_back(i);
  }
  return out;
}

std::optional<DenseProgram> DenseProgram::compile(const BinaryProgram& program) {
  DenseProgram p;
  p.num_vars = program.num_variables();
  p.columns.resize(p.num_vars);
  for (std::size_t r = 0; r < program.num_rows(); ++r) {
    const ConstraintRow& row = program.rows()[r];
    BigInt magnitude = 0;
    std::vector<Entry> entries;
    for (const Term& t : row.terms) {
      magnitude += abs(t.coef);
      if (magnitude >= kLimit) return std::nullopt;
      entries.push_back({t.var, static_cast<std::int64_t>(t.coef)});
      p.columns[t.var].push_back({r, static_cast<std::int64_t>(t.coef)});
    }
    const std::int64_t rhs = clamp_bound(row.rhs);
    p.lo.push_back(row.rel == Relation::kLe ? -kLimit : rhs);
    p.hi.push_back(row.rel == Relation::kGe ? kLimit : rhs);
    p.rows.push_back(std::move(entries));
  }
  return p;
}

std::optional<std::uint64_t> first_feasible_reference(const DenseProgram& p) {
  const std::size_t n = p.num_vars;
  return first_rank_serial(n, [&](std::uint64_t rank) {
    for (std::size_t r = 0; r < p.num_rows(); ++r) {
      std::int64_t sum = 0;
      for (const auto& e : p.rows[r]) {
        if (rank_bit(rank, n, e.index)) sum += e.coef;
      }
      if (!in_range(p, r, sum)) return false;
    }
    return true;
  });
}

std::optional<std::uint64_t> first_feasible_parallel(const DenseProgram& p) {
  const std::size_t n = p.num_vars;
  const std::size_t low = std::min(n, kSuffixBits);
  const std::size_t high = n - low;
  const std::int64_t blocks = std::int64_t{1} << high;
  const std::uint64_t suffixes = std::uint64_t{1} << low;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};

#pragma omp parallel
  {
    std::vector<std::int64_t> sums(p.num_rows());
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::uint64_t base = static_cast<std::uint64_t>(b) << low;
      if (base > best.load(std::memory_order_relaxed)) continue;
      std::fill(sums.begin(), sums.end(), 0);
      for (std::size_t v = 0; v < high; ++v) {
        if (!rank_bit(base, n, v)) continue;
        for (const auto& e : p.columns[v]) sums[e.index] += e.coef;
      }
      std::size_t violated = 0;
      for (std::size_t r = 0; r < p.num_rows(); ++r) {
        if (!in_range(p, r, sums[r])) ++violated;
      }
      std::uint64_t suffix = 0;
      std::uint64_t best_suffix = kNone;
      if (violated == 0) best_suffix = 0;
      for (std::uint64_t k = 1; k < suffixes && best_suffix != 0; ++k) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(k));
        suffix ^= std::uint64_t{1} << bit;
        const std::size_t var = n - 1 - bit;
        const bool on = ((suffix >> bit) & 1u) != 0;
        for (const auto& e : p.columns[var]) {
          const bool was = in_range(p, e.index, sums[e.index]);
          sums[e.index] += on ? e.coef : -e.coef;
          const bool now = in_range(p, e.index, sums[e.index]);
          if (was && !now) ++violated;
          if (!was && now) --violated;
        }
        if (violated == 0 && suffix < best_suffix) best_suffix = suffix;
      }
      if (best_suffix != kNone) {
        const std::uint64_t r = base | best_suffix;
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

}  // namespace linorbit::kernels
