#include <algorithm>
#include <string>

#include "linorbit/errors.hpp"
#include "linorbit/reductions.hpp"

namespace linorbit {
namespace {

template <class T>
const T& payload(const Problem& p, ProblemKind expected) {
  if (kind_of(p) != expected) {
    throw KindMismatch("expected a " + std::string(tag(expected)) + " instance, got " +
                       std::string(tag(kind_of(p))));
  }
  return std::get<T>(p);
}

template <class W>
const W& witness(const Certificate& c, ProblemKind expected) {
  if (c.kind != expected) {
    throw KindMismatch("expected a " + std::string(tag(expected)) + " certificate, got " +
                       std::string(tag(c.kind)));
  }
  const W* w = std::get_if<W>(&c.witness);
  if (w == nullptr) throw InvalidCertificate("certificate witness has the wrong shape");
  return *w;
}

std::uint64_t total_entries(const SetFamily& f) {
  std::uint64_t n = 0;
  for (const auto& s : f.sets) n += s.size();
  return n;
}

std::uint64_t covered_elements(const SetFamily& f) {
  std::vector<bool> seen(f.universe_size, false);
  for (const auto& s : f.sets) {
    for (std::size_t x : s) seen[x] = true;
  }
  return static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), true));
}

const BinaryProgram& program_of(const Problem& p) { return std::get<ZeroOneIp>(p).program; }

std::vector<CountCheck> ip_counts(const Problem& target, std::uint64_t nonzeros,
                                  std::uint64_t rhs) {
  const BinaryProgram& prog = program_of(target);
  return {{"nonzeros", nonzeros, prog.nonzeros()}, {"rhs entries", rhs, prog.num_rows()}};
}

// Wraps a typed transform/lift pair into the uniform catalog shape.
template <class Src, class Dst, class WSrc, class WDst, class Transform, class Lift>
ReductionSpec make_spec(std::string id, ProblemKind source, ProblemKind target, Transform transform,
                        Lift lift, AffineBound growth, bool linear) {
  ReductionSpec spec;
  spec.id = std::move(id);
  spec.source = source;
  spec.target = target;
  spec.transform = [source, transform](const Problem& p) -> Problem {
    return transform(payload<Src>(p, source));
  };
  spec.lift = [source, target, lift](const Problem& p, const Certificate& c) -> Certificate {
    return {source, lift(payload<Src>(p, source), witness<WDst>(c, target))};
  };
  spec.growth = growth;
  spec.linear = linear;
  return spec;
}

std::vector<ReductionSpec> build_catalog() {
  using K = ProblemKind;
  std::vector<ReductionSpec> out;

  // Each clause of size k > 3 becomes k - 2 clauses of size 3 (3k - 6 <= 3k).
  out.push_back(make_spec<Sat, ThreeSat, TruthAssignment, TruthAssignment>(
      "sat_to_3sat", K::kSat, K::kThreeSat, sat_to_3sat, lift_sat_to_3sat, {3, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& f = std::get<Sat>(s).formula;
    const auto& g = std::get<ThreeSat>(t).formula;
    std::uint64_t clauses = 0;
    std::uint64_t fresh = 0;
    for (const auto& c : f.clauses) {
      clauses += c.size() > 3 ? c.size() - 2 : 1;
      fresh += c.size() > 3 ? c.size() - 3 : 0;
    }
    return std::vector<CountCheck>{{"clauses", clauses, g.clauses.size()},
                                   {"fresh variables", fresh, g.num_vars - f.num_vars}};
  };

  // N + 11e nonzeros and 3e + 2 RHS entries after slack conversion; N <= e + 1
  // on connected graphs.
  out.push_back(make_spec<Clique, ZeroOneIp, IndexSet, BinaryVector>(
      "clique_to_ip", K::kClique, K::kIp01, clique_to_ip, lift_clique_to_ip, {15, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& g = std::get<Clique>(s).graph;
    return ip_counts(t, g.num_vertices + 8 * g.num_edges(), 3 * g.num_edges() + 2);
  };

  out.push_back(make_spec<SetPacking, ZeroOneIp, IndexSet, BinaryVector>(
      "set_packing_to_ip", K::kSetPacking, K::kIp01, set_packing_to_ip, lift_set_packing_to_ip,
      {4, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& f = std::get<SetPacking>(s).family;
    return ip_counts(t, total_entries(f) + f.sets.size(), f.universe_size + 1);
  };

  out.push_back(make_spec<NodeCover, SetCovering, IndexSet, IndexSet>(
      "nc_to_sc", K::kNodeCover, K::kSetCovering, node_cover_to_set_covering,
      lift_node_cover_to_set_covering, {2, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& g = std::get<NodeCover>(s).graph;
    return std::vector<CountCheck>{
        {"set entries", 2 * g.num_edges(), total_entries(std::get<SetCovering>(t).family)}};
  };

  out.push_back(make_spec<SetCovering, ZeroOneIp, IndexSet, BinaryVector>(
      "sc_to_ip", K::kSetCovering, K::kIp01, set_covering_to_ip, lift_set_covering_to_ip, {3, 0},
      true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& f = std::get<SetCovering>(s).family;
    return ip_counts(t, total_entries(f) + f.sets.size(), covered_elements(f) + 1);
  };

  // Gadget positions have in-degree x out-degree <= 6, over 2e positions.
  out.push_back(make_spec<FeedbackArcSet, FeedbackNodeSet, IndexSet, IndexSet>(
      "fas_to_fns", K::kFeedbackArcSet, K::kFeedbackNodeSet, fas_to_fns, lift_fas_to_fns, {12, 0},
      true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& g = std::get<FeedbackArcSet>(s).graph;
    const FasExpansion ex = expand_for_fas(g);
    return std::vector<CountCheck>{
        {"expanded vertices", 2 * g.num_arcs(), ex.expanded.num_vertices},
        {"line graph nodes", ex.expanded.num_arcs(),
         std::get<FeedbackNodeSet>(t).graph.num_vertices}};
  };

  out.push_back(make_spec<DirectedHcp, UndirectedHcp, CycleOrder, CycleOrder>(
      "dhcp_to_hcp", K::kDhcp, K::kHcp, dhcp_to_hcp, lift_dhcp_to_hcp, {3, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& g = std::get<DirectedHcp>(s).graph;
    return std::vector<CountCheck>{
        {"edges", g.num_arcs() + 2 * g.num_vertices, std::get<UndirectedHcp>(t).graph.num_edges()}};
  };

  // 3 nonzeros, 1 RHS entry and 2 surplus variables per clause.
  out.push_back(make_spec<ThreeSat, ZeroOneIp, TruthAssignment, BinaryVector>(
      "3sat_to_ip", K::kThreeSat, K::kIp01, threesat_to_ip, lift_threesat_to_ip, {2, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto n = std::get<ThreeSat>(s).formula.clauses.size();
    return ip_counts(t, 3 * n, n);
  };

  out.push_back(make_spec<ExactCover, ZeroOneIp, IndexSet, BinaryVector>(
      "exact_cover_to_ip", K::kExactCover, K::kIp01, exact_cover_to_ip, lift_exact_cover_to_ip,
      {2, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& f = std::get<ExactCover>(s).family;
    return ip_counts(t, total_entries(f), covered_elements(f));
  };

  out.push_back(make_spec<HittingSet, ZeroOneIp, IndexSet, BinaryVector>(
      "hitting_set_to_ip", K::kHittingSet, K::kIp01, hitting_set_to_ip, lift_hitting_set_to_ip,
      {2, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& f = std::get<HittingSet>(s).family;
    return ip_counts(t, total_entries(f), f.sets.size());
  };

  // Roughly 7N + 22e plus the weight-row slack, whose width stays within 16
  // bits of log(e) for weights below 2^16.
  out.push_back(make_spec<SteinerTree, ZeroOneIp, RootedTree, BinaryVector>(
      "steiner_to_ip", K::kSteinerTree, K::kIp01, steiner_tree_to_ip, lift_steiner_tree_to_ip,
      {15, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& g = std::get<SteinerTree>(s).graph;
    // e counts oriented arcs: each undirected edge contributes two.
    const std::uint64_t arcs = 2 * g.num_edges();
    return std::vector<CountCheck>{
        {"nonzeros", 4 * g.num_vertices + 7 * arcs, program_of(t).nonzeros()}};
  };

  out.push_back(make_spec<ThreeDimMatching, ZeroOneIp, IndexSet, BinaryVector>(
      "3dm_to_ip", K::kThreeDimMatching, K::kIp01, three_dim_matching_to_ip,
      lift_three_dim_matching_to_ip, {2, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& f = std::get<ThreeDimMatching>(s).family;
    return ip_counts(t, 3 * f.triples.size(), 3 * f.t_size);
  };

  out.push_back(make_spec<Knapsack, ZeroOneIp, IndexSet, BinaryVector>(
      "ks_to_ip", K::kKnapsack, K::kIp01, knapsack_to_ip, lift_knapsack_to_ip, {1, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    return ip_counts(t, std::get<Knapsack>(s).values.size(), 1);
  };

  out.push_back(make_spec<Partition, Knapsack, IndexSet, IndexSet>(
      "part_to_ks", K::kPartition, K::kKnapsack, partition_to_knapsack, lift_partition_to_knapsack,
      {1, 1}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    return std::vector<CountCheck>{
        {"items", std::get<Partition>(s).values.size(), std::get<Knapsack>(t).values.size()}};
  };

  // 13e nonzeros, 8e slacks, 4e + 1 RHS entries and the weight-row slack.
  out.push_back(make_spec<MaxCut, ZeroOneIp, IndexSet, BinaryVector>(
      "max_cut_to_ip", K::kMaxCut, K::kIp01, max_cut_to_ip, lift_max_cut_to_ip, {14, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto e = std::get<MaxCut>(s).graph.num_edges();
    return ip_counts(t, 13 * e, 4 * e + 1);
  };

  out.push_back(make_spec<ChromaticNumber, CliqueCover, Coloring, CliquePartition>(
      "chromatic_to_clique_cover", K::kChromaticNumber, K::kCliqueCover,
      [](const ChromaticNumber& c) { return chromatic_to_clique_cover(c, CliqueCoverStorage::kDense); },
      lift_chromatic_to_clique_cover, {2, 0}, false));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& g = std::get<ChromaticNumber>(s).graph;
    return std::vector<CountCheck>{
        {"complement edges", complement_edge_count(g), std::get<CliqueCover>(t).graph.num_edges()}};
  };

  out.push_back(make_spec<ChromaticNumber, CliqueCover, Coloring, CliquePartition>(
      "chromatic_to_clique_cover_compressed", K::kChromaticNumber, K::kCliqueCover,
      [](const ChromaticNumber& c) {
        return chromatic_to_clique_cover(c, CliqueCoverStorage::kCompressed);
      },
      lift_chromatic_to_clique_cover, {1, 0}, true));
  out.back().counts = [](const Problem& s, const Problem& t) {
    const auto& g = std::get<ChromaticNumber>(s).graph;
    return std::vector<CountCheck>{
        {"stored edges", g.num_edges(), std::get<CliqueCover>(t).graph.num_edges()}};
  };
  return out;
}

}  // namespace

const std::vector<ReductionSpec>& reduction_catalog() {
  static const std::vector<ReductionSpec> catalog = build_catalog();
  return catalog;
}

const ReductionSpec& find_reduction(std::string_view id) {
  for (const auto& spec : reduction_catalog()) {
    if (spec.id == id) return spec;
  }
  throw LookupError("unknown reduction '" + std::string(id) + "'");
}

ReductionChain::ReductionChain(std::vector<const ReductionSpec*> links) : links_(std::move(links)) {
  for (std::size_t i = 1; i < links_.size(); ++i) {
    if (links_[i - 1]->target != links_[i]->source) {
      throw KindMismatch(links_[i - 1]->id + " produces " +
                         std::string(tag(links_[i - 1]->target)) + " but " + links_[i]->id +
                         " expects " + std::string(tag(links_[i]->source)));
    }
  }
}

ReductionChain ReductionChain::from_ids(std::span<const std::string> ids) {
  std::vector<const ReductionSpec*> links;
  for (const auto& id : ids) links.push_back(&find_reduction(id));
  return ReductionChain(std::move(links));
}

std::vector<std::string> ReductionChain::ids() const {
  std::vector<std::string> out;
  for (const auto* link : links_) out.push_back(link->id);
  return out;
}

AffineBound ReductionChain::growth() const {
  AffineBound bound{1, 0};
  for (const auto* link : links_) bound = bound.then(link->growth);
  return bound;
}

ChainRun run_chain(const ReductionChain& chain, const Problem& instance) {
  ChainRun run;
  run.stages.push_back(instance);
  for (const auto* link : chain.links()) {
    run.stages.push_back(link->transform(run.stages.back()));
  }
  return run;
}

Problem compose(const ReductionChain& chain, const Problem& instance) {
  return run_chain(chain, instance).output();
}

Certificate lift_chain(const ReductionChain& chain, const ChainRun& run,
                       const Certificate& final_certificate) {
  const auto& links = chain.links();
  if (run.stages.size() != links.size() + 1) {
    throw ContractViolation("chain run does not belong to this chain");
  }
  Certificate cert = final_certificate;
  for (std::size_t i = links.size(); i-- > 0;) cert = links[i]->lift(run.stages[i], cert);
  return cert;
}

ReductionChain route_to_kernel(ProblemKind kind) {
  std::vector<std::string> ids;
  switch (kind) {
    case ProblemKind::kSat: ids = {"sat_to_3sat", "3sat_to_ip"}; break;
    case ProblemKind::kClique: ids = {"clique_to_ip"}; break;
    case ProblemKind::kSetPacking: ids = {"set_packing_to_ip"}; break;
    case ProblemKind::kNodeCover: ids = {"nc_to_sc", "sc_to_ip"}; break;
    case ProblemKind::kSetCovering: ids = {"sc_to_ip"}; break;
    case ProblemKind::kFeedbackArcSet: ids = {"fas_to_fns"}; break;
    case ProblemKind::kDhcp: ids = {"dhcp_to_hcp"}; break;
    case ProblemKind::kThreeSat: ids = {"3sat_to_ip"}; break;
    case ProblemKind::kExactCover: ids = {"exact_cover_to_ip"}; break;
    case ProblemKind::kHittingSet: ids = {"hitting_set_to_ip"}; break;
    case ProblemKind::kSteinerTree: ids = {"steiner_to_ip"}; break;
    case ProblemKind::kThreeDimMatching: ids = {"3dm_to_ip"}; break;
    case ProblemKind::kKnapsack: ids = {"ks_to_ip"}; break;
    case ProblemKind::kPartition: ids = {"part_to_ks", "ks_to_ip"}; break;
    case ProblemKind::kMaxCut: ids = {"max_cut_to_ip"}; break;
    default: break;
  }
  return ReductionChain::from_ids(ids);
}

}  // namespace linorbit
