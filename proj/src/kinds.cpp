#include "linorbit/kinds.hpp"

#include <string>

#include "linorbit/errors.hpp"

namespace linorbit {
namespace {

constexpr std::array<std::string_view, kNumKinds> kTags = {
    "sat",          "ip01",           "clique",        "set_packing",
    "node_cover",   "set_covering",   "feedback_node_set", "feedback_arc_set",
    "dhcp",         "hcp",            "threesat",      "chromatic_number",
    "clique_cover", "exact_cover",    "hitting_set",   "steiner_tree",
    "three_dim_matching", "knapsack", "job_sequencing", "partition",
    "max_cut",
};

}  // namespace

std::string_view tag(ProblemKind kind) { return kTags[static_cast<std::size_t>(kind)]; }

ProblemKind parse_kind(std::string_view text) {
  for (std::size_t i = 0; i < kTags.size(); ++i) {
    if (kTags[i] == text) return static_cast<ProblemKind>(i);
  }
  throw ParseError("unknown problem kind '" + std::string(text) + "'");
}

bool is_kernel(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kIp01:
    case ProblemKind::kFeedbackNodeSet:
    case ProblemKind::kHcp:
    case ProblemKind::kChromaticNumber:
    case ProblemKind::kCliqueCover:
    case ProblemKind::kJobSequencing:
      return true;
    default:
      return false;
  }
}

}  // namespace linorbit
