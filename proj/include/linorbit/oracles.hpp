#pragma once

#include <cstdint>
#include <optional>

#include "linorbit/instances.hpp"
#include "linorbit/ip_solver.hpp"

namespace linorbit {

enum class Answer : std::uint8_t { kNo, kYes };

struct OracleVerdict {
  Answer answer = Answer::kNo;
  std::optional<Certificate> certificate;  // present iff YES
  std::uint64_t explored = 0;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// Exhaustive ground-truth decision procedure.
//
// Candidate order (the returned witness is the first in this order):
//  - SAT, 3-SAT, 0-1 IP, Clique, Set Packing, Exact Cover, Hitting Set,
//    Steiner Tree, 3DM, Knapsack, Partition, Max Cut: 0/1 indicator vectors in
//    lexicographic order.
//  - Node Cover, Set Covering, Feedback Node/Arc Set ("at most k"): subsets
//    by size, then lexicographically.
//  - HCP, DHCP: depth-first over cycles starting at vertex 0, neighbours in
//    increasing order. Chromatic Number and Clique Cover: depth-first over
//    canonical colourings / partitions.
//
// `budget` caps the leaves of the search tree; enumerations of known size are
// refused up front, backtracking searches when the count is exceeded. Throws
// BudgetExceeded or UnsupportedKind.
OracleVerdict solve(const Problem& instance, std::uint64_t budget = kDefaultBudget,
                    ScanStrategy strategy = ScanStrategy::kParallel);

}  // namespace linorbit
