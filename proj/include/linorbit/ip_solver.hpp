#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linorbit/binary_program.hpp"

namespace linorbit {

enum class ScanStrategy : std::uint8_t { kReference, kParallel };

inline constexpr std::size_t kDefaultVarCap = 24;

struct IpResult {
  bool feasible = false;
  std::vector<std::uint8_t> assignment;  // empty when infeasible
  // Assignments preceding and including the witness in lexicographic order,
  // or 2^v when infeasible.
  std::uint64_t explored = 0;
};

// Exhaustive search over all 2^v assignments, returning the lexicographically
// first feasible one. Throws BudgetExceeded when v > var_cap (var_cap itself
// may not exceed 40).
IpResult solve_ip(const BinaryProgram& program, std::size_t var_cap = kDefaultVarCap,
                  ScanStrategy strategy = ScanStrategy::kParallel);

}  // namespace linorbit
