#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "linorbit/bigint.hpp"
#include "linorbit/binary_program.hpp"
#include "linorbit/graph.hpp"
#include "linorbit/kinds.hpp"

namespace linorbit {

// Literals use the DIMACS convention: +v / -v for variable v in [1, num_vars].
using Literal = std::int32_t;

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Elements are 0-based indices into [0, universe_size).
struct SetFamily {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

using Triple = std::array<std::size_t, 3>;

struct TripleFamily {
  std::size_t t_size = 0;
  std::vector<Triple> triples;

  friend bool operator==(const TripleFamily&, const TripleFamily&) = default;
};

// One payload type per problem; the variant index is the ProblemKind.

struct Sat {
  CnfFormula formula;
  friend bool operator==(const Sat&, const Sat&) = default;
};

// At most three literals per clause (Karp's problem 11).
struct ThreeSat {
  CnfFormula formula;
  friend bool operator==(const ThreeSat&, const ThreeSat&) = default;
};

struct ZeroOneIp {
  BinaryProgram program;
  friend bool operator==(const ZeroOneIp&, const ZeroOneIp&) = default;
};

struct Clique {
  UGraph graph;
  std::size_t k = 1;
  friend bool operator==(const Clique&, const Clique&) = default;
};

struct SetPacking {
  SetFamily family;
  std::size_t l = 1;
  friend bool operator==(const SetPacking&, const SetPacking&) = default;
};

struct NodeCover {
  UGraph graph;
  std::size_t l = 1;
  friend bool operator==(const NodeCover&, const NodeCover&) = default;
};

struct SetCovering {
  SetFamily family;
  std::size_t k = 1;
  friend bool operator==(const SetCovering&, const SetCovering&) = default;
};

struct FeedbackNodeSet {
  DiGraph graph;
  std::size_t k = 0;
  friend bool operator==(const FeedbackNodeSet&, const FeedbackNodeSet&) = default;
};

struct FeedbackArcSet {
  DiGraph graph;
  std::size_t k = 0;
  friend bool operator==(const FeedbackArcSet&, const FeedbackArcSet&) = default;
};

struct DirectedHcp {
  DiGraph graph;
  friend bool operator==(const DirectedHcp&, const DirectedHcp&) = default;
};

struct UndirectedHcp {
  UGraph graph;
  friend bool operator==(const UndirectedHcp&, const UndirectedHcp&) = default;
};

struct ChromaticNumber {
  UGraph graph;
  std::size_t k = 1;
  friend bool operator==(const ChromaticNumber&, const ChromaticNumber&) = default;
};

// With `complemented` set, the instance is the clique cover of complement(graph):
// the compressed storage of a dense target.
struct CliqueCover {
  UGraph graph;
  std::size_t l = 1;
  bool complemented = false;
  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

struct ExactCover {
  SetFamily family;
  friend bool operator==(const ExactCover&, const ExactCover&) = default;
};

struct HittingSet {
  SetFamily family;
  friend bool operator==(const HittingSet&, const HittingSet&) = default;
};

struct SteinerTree {
  UGraph graph;  // weighted
  std::vector<std::size_t> terminals;
  BigInt k;
  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
};

struct ThreeDimMatching {
  TripleFamily family;
  friend bool operator==(const ThreeDimMatching&, const ThreeDimMatching&) = default;
};

struct Knapsack {
  std::vector<BigInt> values;
  BigInt target;
  friend bool operator==(const Knapsack&, const Knapsack&) = default;
};

// Kind tag only: no data is defined for it.
struct JobSequencing {
  friend bool operator==(const JobSequencing&, const JobSequencing&) = default;
};

struct Partition {
  std::vector<BigInt> values;
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct MaxCut {
  UGraph graph;  // weighted
  BigInt W;
  friend bool operator==(const MaxCut&, const MaxCut&) = default;
};

using Problem =
    std::variant<Sat, ZeroOneIp, Clique, SetPacking, NodeCover, SetCovering,
                 FeedbackNodeSet, FeedbackArcSet, DirectedHcp, UndirectedHcp,
                 ThreeSat, ChromaticNumber, CliqueCover, ExactCover, HittingSet,
                 SteinerTree, ThreeDimMatching, Knapsack, JobSequencing,
                 Partition, MaxCut>;

static_assert(std::variant_size_v<Problem> == kNumKinds);

inline ProblemKind kind_of(const Problem& p) {
  return static_cast<ProblemKind>(p.index());
}

// Throws InvalidInstance describing the first violated invariant.
void validate(const Problem& p);

// ---------------------------------------------------------------------------
// Certificates

struct TruthAssignment {
  std::vector<bool> values;  // values[v - 1] for variable v
  friend bool operator==(const TruthAssignment&, const TruthAssignment&) = default;
};

struct BinaryVector {
  std::vector<std::uint8_t> values;
  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
};

// Vertices, set indices, elements, arcs, triples or items, depending on kind.
struct IndexSet {
  std::vector<std::size_t> indices;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

struct CycleOrder {
  std::vector<std::size_t> vertices;
  friend bool operator==(const CycleOrder&, const CycleOrder&) = default;
};

// Edge indices of the Steiner subtree plus its root vertex.
struct RootedTree {
  std::size_t root = 0;
  std::vector<std::size_t> edges;
  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

struct Coloring {
  std::vector<std::size_t> colors;  // colour per vertex, in [0, k)
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct CliquePartition {
  std::vector<std::vector<std::size_t>> cliques;
  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

using Witness = std::variant<TruthAssignment, BinaryVector, IndexSet, CycleOrder,
                             RootedTree, Coloring, CliquePartition>;

enum class WitnessType : std::uint8_t {
  kTruthAssignment,
  kBinaryVector,
  kIndexSet,
  kCycleOrder,
  kRootedTree,
  kColoring,
  kCliquePartition,
};

struct Certificate {
  ProblemKind kind = ProblemKind::kSat;
  Witness witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Throws UnsupportedKind for Job Sequencing.
WitnessType witness_type(ProblemKind kind);

// True iff `cert` witnesses a YES answer. Throws KindMismatch when the
// certificate belongs to another kind and InvalidCertificate when an index is
// out of range, repeated, or the witness has the wrong length.
bool verify_certificate(const Problem& instance, const Certificate& cert);

// ---------------------------------------------------------------------------
// Input size

struct SizeReport {
  std::uint64_t elements = 0;
  std::uint64_t bits = 0;

  friend bool operator==(const SizeReport&, const SizeReport&) = default;
};

// Element mode follows each problem's stated input size; bits mode charges
// every number its binary length (an edge costs both endpoint indices).
// Throws UnsupportedKind for Job Sequencing.
SizeReport measure(const Problem& instance);
std::uint64_t measure_input_size(const Problem& instance, SizeMode mode);

}  // namespace linorbit
