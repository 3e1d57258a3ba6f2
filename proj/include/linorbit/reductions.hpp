#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linorbit/instances.hpp"

namespace linorbit {

// ---------------------------------------------------------------------------
// Typed transforms and certificate lifts. Every lift takes the source
// instance and a certificate of the transformed instance; it throws
// InvalidCertificate when the certificate does not fit the target's shape.

ThreeSat sat_to_3sat(const Sat& src);
TruthAssignment lift_sat_to_3sat(const Sat& src, const TruthAssignment& target);

ZeroOneIp clique_to_ip(const Clique& src);
IndexSet lift_clique_to_ip(const Clique& src, const BinaryVector& target);

ZeroOneIp set_packing_to_ip(const SetPacking& src);
IndexSet lift_set_packing_to_ip(const SetPacking& src, const BinaryVector& target);

SetCovering node_cover_to_set_covering(const NodeCover& src);
IndexSet lift_node_cover_to_set_covering(const NodeCover& src, const IndexSet& target);

ZeroOneIp set_covering_to_ip(const SetCovering& src);
IndexSet lift_set_covering_to_ip(const SetCovering& src, const BinaryVector& target);

// Vertex-to-path expansion of the arc graph, kept for lifting and size checks.
struct FasExpansion {
  DiGraph expanded;  // G'
  // For each arc of G': the arc of G it stands for (external arcs) or the
  // arc attached one position further along the gadget path (path arcs).
  std::vector<std::size_t> origin_arc;
  std::size_t external_arcs = 0;
};
FasExpansion expand_for_fas(const DiGraph& g);
FeedbackNodeSet fas_to_fns(const FeedbackArcSet& src);
IndexSet lift_fas_to_fns(const FeedbackArcSet& src, const IndexSet& target);

UndirectedHcp dhcp_to_hcp(const DirectedHcp& src);
CycleOrder lift_dhcp_to_hcp(const DirectedHcp& src, const CycleOrder& target);

ZeroOneIp threesat_to_ip(const ThreeSat& src);
TruthAssignment lift_threesat_to_ip(const ThreeSat& src, const BinaryVector& target);

ZeroOneIp exact_cover_to_ip(const ExactCover& src);
IndexSet lift_exact_cover_to_ip(const ExactCover& src, const BinaryVector& target);

ZeroOneIp hitting_set_to_ip(const HittingSet& src);
IndexSet lift_hitting_set_to_ip(const HittingSet& src, const BinaryVector& target);

// True when the weight row is emitted (k below the total edge weight).
bool steiner_weight_row_needed(const SteinerTree& src);
ZeroOneIp steiner_tree_to_ip(const SteinerTree& src);
RootedTree lift_steiner_tree_to_ip(const SteinerTree& src, const BinaryVector& target);

ZeroOneIp three_dim_matching_to_ip(const ThreeDimMatching& src);
IndexSet lift_three_dim_matching_to_ip(const ThreeDimMatching& src,
                                       const BinaryVector& target);

ZeroOneIp knapsack_to_ip(const Knapsack& src);
IndexSet lift_knapsack_to_ip(const Knapsack& src, const BinaryVector& target);

Knapsack partition_to_knapsack(const Partition& src);
IndexSet lift_partition_to_knapsack(const Partition& src, const IndexSet& target);

ZeroOneIp max_cut_to_ip(const MaxCut& src);
IndexSet lift_max_cut_to_ip(const MaxCut& src, const BinaryVector& target);

enum class CliqueCoverStorage : std::uint8_t { kDense, kCompressed };
CliqueCover chromatic_to_clique_cover(const ChromaticNumber& src, CliqueCoverStorage storage);
Coloring lift_chromatic_to_clique_cover(const ChromaticNumber& src,
                                        const CliquePartition& target);

// ---------------------------------------------------------------------------
// Uniform catalog

// out <= alpha * in + beta, on element-mode sizes.
struct AffineBound {
  std::uint64_t alpha = 1;
  std::uint64_t beta = 0;

  bool holds(std::uint64_t in, std::uint64_t out) const {
    return out <= alpha * in + beta;
  }
  // Bound of "this, then next".
  AffineBound then(const AffineBound& next) const {
    return {next.alpha * alpha, next.alpha * beta + next.beta};
  }
  friend bool operator==(const AffineBound&, const AffineBound&) = default;
};

struct CountCheck {
  std::string name;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;

  bool ok() const { return expected == actual; }
};

struct ReductionSpec {
  std::string id;
  ProblemKind source;
  ProblemKind target;
  std::function<Problem(const Problem&)> transform;
  std::function<Certificate(const Problem& source, const Certificate& target)> lift;
  AffineBound growth;
  // False only for the dense clique-cover target, whose size is quadratic on
  // sparse inputs.
  bool linear = true;
  // Exact nonzero / RHS / entry counts, where stated for this reduction.
  std::function<std::vector<CountCheck>(const Problem& source, const Problem& target)> counts;
};

// The sixteen reductions; Chromatic Number -> Clique Cover appears twice, once
// per storage mode ("chromatic_to_clique_cover" and
// "chromatic_to_clique_cover_compressed").
const std::vector<ReductionSpec>& reduction_catalog();

// Throws LookupError.
const ReductionSpec& find_reduction(std::string_view id);

class ReductionChain {
 public:
  ReductionChain() = default;
  // Throws KindMismatch when adjacent links do not compose.
  explicit ReductionChain(std::vector<const ReductionSpec*> links);
  static ReductionChain from_ids(std::span<const std::string> ids);

  const std::vector<const ReductionSpec*>& links() const { return links_; }
  bool empty() const { return links_.empty(); }
  std::vector<std::string> ids() const;
  AffineBound growth() const;

 private:
  std::vector<const ReductionSpec*> links_;
};

// stages[0] is the input, stages.back() the final instance.
struct ChainRun {
  std::vector<Problem> stages;
  const Problem& output() const { return stages.back(); }
};

// Applies the transforms left to right. Throws KindMismatch.
ChainRun run_chain(const ReductionChain& chain, const Problem& instance);
Problem compose(const ReductionChain& chain, const Problem& instance);

// Applies the lifts right to left.
Certificate lift_chain(const ReductionChain& chain, const ChainRun& run,
                       const Certificate& final_certificate);

// Chain from `kind` into the kernel {ip01, feedback_node_set, hcp,
// chromatic_number, clique_cover, job_sequencing}; empty for kernel members.
ReductionChain route_to_kernel(ProblemKind kind);

}  // namespace linorbit
