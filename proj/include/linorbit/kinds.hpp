#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace linorbit {

// Karp's 21 problems, in the order of his 1972 list (numbering = value + 1).
enum class ProblemKind : std::uint8_t {
  kSat,
  kIp01,
  kClique,
  kSetPacking,
  kNodeCover,
  kSetCovering,
  kFeedbackNodeSet,
  kFeedbackArcSet,
  kDhcp,
  kHcp,
  kThreeSat,
  kChromaticNumber,
  kCliqueCover,
  kExactCover,
  kHittingSet,
  kSteinerTree,
  kThreeDimMatching,
  kKnapsack,
  kJobSequencing,
  kPartition,
  kMaxCut,
};

inline constexpr std::size_t kNumKinds = 21;

inline constexpr std::array<ProblemKind, kNumKinds> kAllKinds = {
    ProblemKind::kSat,           ProblemKind::kIp01,
    ProblemKind::kClique,        ProblemKind::kSetPacking,
    ProblemKind::kNodeCover,     ProblemKind::kSetCovering,
    ProblemKind::kFeedbackNodeSet, ProblemKind::kFeedbackArcSet,
    ProblemKind::kDhcp,          ProblemKind::kHcp,
    ProblemKind::kThreeSat,      ProblemKind::kChromaticNumber,
    ProblemKind::kCliqueCover,   ProblemKind::kExactCover,
    ProblemKind::kHittingSet,    ProblemKind::kSteinerTree,
    ProblemKind::kThreeDimMatching, ProblemKind::kKnapsack,
    ProblemKind::kJobSequencing, ProblemKind::kPartition,
    ProblemKind::kMaxCut,
};

// Stable wire tag ("sat", "threesat", "ip01", ...).
std::string_view tag(ProblemKind kind);

// Throws ParseError on an unknown tag.
ProblemKind parse_kind(std::string_view tag);

inline constexpr int karp_number(ProblemKind kind) {
  return static_cast<int>(kind) + 1;
}

// Members of the six-problem kernel: 0-1 IP, Feedback Node Set, HCP,
// Chromatic Number, Clique Cover and Job Sequencing.
bool is_kernel(ProblemKind kind);

}  // namespace linorbit
