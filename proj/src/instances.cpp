#include "linorbit/instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "linorbit/errors.hpp"
#include "overloaded.hpp"

namespace linorbit {
namespace {

using detail::Overloaded;

void check_formula(const CnfFormula& f, std::size_t max_clause) {
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    if (clause.empty()) throw InvalidInstance("clause " + std::to_string(c + 1) + " is empty");
    if (clause.size() > max_clause) {
      throw InvalidInstance("clause " + std::to_string(c + 1) + " has more than " +
                            std::to_string(max_clause) + " literals");
    }
    for (Literal lit : clause) {
      const auto var = static_cast<std::size_t>(lit < 0 ? -static_cast<std::int64_t>(lit) : lit);
      if (lit == 0 || var > f.num_vars) {
        throw InvalidInstance("literal " + std::to_string(lit) + " out of range");
      }
    }
  }
}

void check_family(const SetFamily& fam) {
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    std::set<std::size_t> seen;
    for (std::size_t x : fam.sets[i]) {
      if (x >= fam.universe_size) {
        throw InvalidInstance("set " + std::to_string(i + 1) + " names an element outside U");
      }
      if (!seen.insert(x).second) {
        throw InvalidInstance("set " + std::to_string(i + 1) + " repeats an element");
      }
    }
  }
}

void check_positive(const std::vector<BigInt>& values) {
  for (const BigInt& v : values) {
    if (v < 1) throw InvalidInstance("integer values must be at least 1");
  }
}

std::size_t entries(const SetFamily& fam) {
  std::size_t n = 0;
  for (const auto& s : fam.sets) n += s.size();
  return n;
}

std::uint64_t index_bits(std::size_t zero_based) { return bit_length(BigInt(zero_based + 1)); }

std::uint64_t edge_bits(const std::vector<Edge>& edges) {
  std::uint64_t bits = 0;
  for (const Edge& e : edges) bits += index_bits(e.u) + index_bits(e.v);
  return bits;
}

std::uint64_t family_bits(const SetFamily& fam) {
  std::uint64_t bits = 0;
  for (const auto& s : fam.sets) {
    for (std::size_t x : s) bits += index_bits(x);
  }
  return bits;
}

std::uint64_t value_bits(const std::vector<BigInt>& values) {
  std::uint64_t bits = 0;
  for (const BigInt& v : values) bits += bit_length(v);
  return bits;
}

std::uint64_t literal_bits(const CnfFormula& f, bool pad_to_three) {
  std::uint64_t bits = 0;
  for (const auto& clause : f.clauses) {
    for (Literal lit : clause) bits += bit_length(BigInt(lit));
    if (pad_to_three && clause.size() < 3) bits += 3 - clause.size();
  }
  return bits;
}

// Distinct, in-range indices; throws InvalidCertificate otherwise.
std::vector<bool> index_mask(const std::vector<std::size_t>& indices, std::size_t bound,
                             const char* what) {
  std::vector<bool> mask(bound, false);
  for (std::size_t i : indices) {
    if (i >= bound) throw InvalidCertificate(std::string(what) + " index out of range");
    if (mask[i]) throw InvalidCertificate(std::string(what) + " index repeated");
    mask[i] = true;
  }
  return mask;
}

template <class W>
const W& expect(const Certificate& cert) {
  const W* w = std::get_if<W>(&cert.witness);
  if (w == nullptr) throw InvalidCertificate("witness has the wrong shape for its kind");
  return *w;
}

bool formula_satisfied(const CnfFormula& f, const TruthAssignment& a) {
  if (a.values.size() != f.num_vars) {
    throw InvalidCertificate("assignment length differs from the variable count");
  }
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(), [&](Literal lit) {
      const bool value = a.values[static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1];
      return lit > 0 ? value : !value;
    });
  });
}

bool is_clique(const AdjacencyMatrix& adj, const std::vector<std::size_t>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!adj(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool verify_steiner(const SteinerTree& st, const RootedTree& tree) {
  const std::size_t n = st.graph.num_vertices;
  if (tree.root >= n) throw InvalidCertificate("root out of range");
  index_mask(tree.edges, st.graph.num_edges(), "edge");
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> touched(n, false);
  BigInt weight = 0;
  for (std::size_t t : tree.edges) {
    const Edge& e = st.graph.edges[t];
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
    touched[e.u] = touched[e.v] = true;
    weight += st.graph.weights[t];
  }
  if (!tree.edges.empty() && !touched[tree.root]) return false;
  touched[tree.root] = true;
  const std::size_t root_set = find(tree.root);
  for (std::size_t v = 0; v < n; ++v) {
    if (touched[v] && find(v) != root_set) return false;
  }
  for (std::size_t r : st.terminals) {
    if (!touched[r]) return false;
  }
  return weight <= st.k;
}

bool verify_cycle(std::size_t n, const std::vector<std::size_t>& order, std::size_t min_n,
                  const auto& has_arc) {
  if (order.size() != n) throw InvalidCertificate("cycle must list every vertex once");
  index_mask(order, n, "vertex");
  if (n < min_n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!has_arc(order[i], order[(i + 1) % n])) return false;
  }
  return true;
}

}  // namespace

void validate(const Problem& p) {
  std::visit(
      Overloaded{
          [](const Sat& x) { check_formula(x.formula, static_cast<std::size_t>(-1)); },
          [](const ThreeSat& x) { check_formula(x.formula, 3); },
          [](const ZeroOneIp& x) { x.program.check(); },
          [](const Clique& x) {
            check_graph(x.graph, false);
            if (x.k > x.graph.num_vertices) throw InvalidInstance("clique size exceeds N");
          },
          [](const SetPacking& x) {
            check_family(x.family);
            if (x.l > x.family.sets.size()) throw InvalidInstance("l exceeds the number of sets");
          },
          [](const NodeCover& x) { check_graph(x.graph, false); },
          [](const SetCovering& x) { check_family(x.family); },
          [](const FeedbackNodeSet& x) { check_digraph(x.graph); },
          [](const FeedbackArcSet& x) { check_digraph(x.graph); },
          [](const DirectedHcp& x) { check_digraph(x.graph); },
          [](const UndirectedHcp& x) { check_graph(x.graph, false); },
          [](const ChromaticNumber& x) { check_graph(x.graph, false); },
          [](const CliqueCover& x) { check_graph(x.graph, false); },
          [](const ExactCover& x) { check_family(x.family); },
          [](const HittingSet& x) { check_family(x.family); },
          [](const SteinerTree& x) {
            check_graph(x.graph, true);
            if (x.terminals.empty()) throw InvalidInstance("terminal set R is empty");
            std::set<std::size_t> seen;
            for (std::size_t r : x.terminals) {
              if (r >= x.graph.num_vertices) throw InvalidInstance("terminal out of range");
              if (!seen.insert(r).second) throw InvalidInstance("terminal repeated");
            }
            if (x.k < 0) throw InvalidInstance("negative budget k");
          },
          [](const ThreeDimMatching& x) {
            std::set<Triple> seen;
            for (const Triple& t : x.family.triples) {
              for (std::size_t c : t) {
                if (c >= x.family.t_size) throw InvalidInstance("triple coordinate out of range");
              }
              if (!seen.insert(t).second) throw InvalidInstance("duplicate triple");
            }
          },
          [](const Knapsack& x) {
            check_positive(x.values);
            if (x.target < 0) throw InvalidInstance("negative knapsack target");
          },
          [](const JobSequencing&) {},
          [](const Partition& x) { check_positive(x.values); },
          [](const MaxCut& x) {
            check_graph(x.graph, true);
            if (x.W < 0) throw InvalidInstance("negative cut target W");
          },
      },
      p);
}

WitnessType witness_type(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kSat:
    case ProblemKind::kThreeSat:
      return WitnessType::kTruthAssignment;
    case ProblemKind::kIp01:
      return WitnessType::kBinaryVector;
    case ProblemKind::kDhcp:
    case ProblemKind::kHcp:
      return WitnessType::kCycleOrder;
    case ProblemKind::kSteinerTree:
      return WitnessType::kRootedTree;
    case ProblemKind::kChromaticNumber:
      return WitnessType::kColoring;
    case ProblemKind::kCliqueCover:
      return WitnessType::kCliquePartition;
    case ProblemKind::kJobSequencing:
      throw UnsupportedKind("job_sequencing has no certificate format");
    default:
      return WitnessType::kIndexSet;
  }
}

bool verify_certificate(const Problem& instance, const Certificate& cert) {
  if (cert.kind != kind_of(instance)) {
    throw KindMismatch("certificate for " + std::string(tag(cert.kind)) + " given to a " +
                       std::string(tag(kind_of(instance))) + " instance");
  }
  return std::visit(
      Overloaded{
          [&](const Sat& x) { return formula_satisfied(x.formula, expect<TruthAssignment>(cert)); },
          [&](const ThreeSat& x) {
            return formula_satisfied(x.formula, expect<TruthAssignment>(cert));
          },
          [&](const ZeroOneIp& x) {
            const auto& v = expect<BinaryVector>(cert).values;
            if (v.size() != x.program.num_variables()) {
              throw InvalidCertificate("vector length differs from the variable count");
            }
            for (std::uint8_t b : v) {
              if (b > 1) throw InvalidCertificate("vector entries must be 0 or 1");
            }
            return satisfies(x.program, v);
          },
          [&](const Clique& x) {
            const auto& vs = expect<IndexSet>(cert).indices;
            index_mask(vs, x.graph.num_vertices, "vertex");
            return vs.size() >= x.k && is_clique(AdjacencyMatrix(x.graph), vs);
          },
          [&](const SetPacking& x) {
            const auto& idx = expect<IndexSet>(cert).indices;
            index_mask(idx, x.family.sets.size(), "set");
            std::vector<bool> used(x.family.universe_size, false);
            for (std::size_t i : idx) {
              for (std::size_t e : x.family.sets[i]) {
                if (used[e]) return false;
                used[e] = true;
              }
            }
            return idx.size() >= x.l;
          },
          [&](const NodeCover& x) {
            const auto& vs = expect<IndexSet>(cert).indices;
            const auto mask = index_mask(vs, x.graph.num_vertices, "vertex");
            if (vs.size() > x.l) return false;
            return std::all_of(x.graph.edges.begin(), x.graph.edges.end(),
                               [&](const Edge& e) { return mask[e.u] || mask[e.v]; });
          },
          [&](const SetCovering& x) {
            const auto& idx = expect<IndexSet>(cert).indices;
            index_mask(idx, x.family.sets.size(), "set");
            if (idx.size() > x.k) return false;
            std::vector<bool> needed(x.family.universe_size, false);
            for (const auto& s : x.family.sets) {
              for (std::size_t e : s) needed[e] = true;
            }
            for (std::size_t i : idx) {
              for (std::size_t e : x.family.sets[i]) needed[e] = false;
            }
            return std::none_of(needed.begin(), needed.end(), [](bool b) { return b; });
          },
          [&](const FeedbackNodeSet& x) {
            const auto& vs = expect<IndexSet>(cert).indices;
            auto keep = index_mask(vs, x.graph.num_vertices, "vertex");
            if (vs.size() > x.k) return false;
            keep.flip();
            return is_acyclic(x.graph, keep, {});
          },
          [&](const FeedbackArcSet& x) {
            const auto& as = expect<IndexSet>(cert).indices;
            auto keep = index_mask(as, x.graph.num_arcs(), "arc");
            if (as.size() > x.k) return false;
            keep.flip();
            return is_acyclic(x.graph, {}, keep);
          },
          [&](const DirectedHcp& x) {
            const std::size_t n = x.graph.num_vertices;
            std::vector<bool> arc(n * n, false);
            for (const Edge& a : x.graph.arcs) arc[a.u * n + a.v] = true;
            return verify_cycle(n, expect<CycleOrder>(cert).vertices, 2,
                                [&](std::size_t u, std::size_t v) { return arc[u * n + v]; });
          },
          [&](const UndirectedHcp& x) {
            const AdjacencyMatrix adj(x.graph);
            return verify_cycle(x.graph.num_vertices, expect<CycleOrder>(cert).vertices, 3,
                                [&](std::size_t u, std::size_t v) { return adj(u, v); });
          },
          [&](const ChromaticNumber& x) {
            const auto& colors = expect<Coloring>(cert).colors;
            if (colors.size() != x.graph.num_vertices) {
              throw InvalidCertificate("coloring length differs from N");
            }
            if (std::any_of(colors.begin(), colors.end(), [&](std::size_t c) { return c >= x.k; })) {
              return false;
            }
            return std::all_of(x.graph.edges.begin(), x.graph.edges.end(),
                               [&](const Edge& e) { return colors[e.u] != colors[e.v]; });
          },
          [&](const CliqueCover& x) {
            const auto& parts = expect<CliquePartition>(cert).cliques;
            std::vector<std::size_t> all;
            for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
            index_mask(all, x.graph.num_vertices, "vertex");
            if (all.size() != x.graph.num_vertices) {
              throw InvalidCertificate("clique partition must cover every vertex");
            }
            if (parts.size() > x.l) return false;
            AdjacencyMatrix adj(x.graph);
            if (x.complemented) adj = AdjacencyMatrix(complement(x.graph));
            return std::all_of(parts.begin(), parts.end(), [&](const auto& part) {
              return !part.empty() && is_clique(adj, part);
            });
          },
          [&](const ExactCover& x) {
            const auto& idx = expect<IndexSet>(cert).indices;
            index_mask(idx, x.family.sets.size(), "set");
            std::vector<int> hits(x.family.universe_size, 0);
            std::vector<bool> needed(x.family.universe_size, false);
            for (const auto& s : x.family.sets) {
              for (std::size_t e : s) needed[e] = true;
            }
            for (std::size_t i : idx) {
              for (std::size_t e : x.family.sets[i]) ++hits[e];
            }
            for (std::size_t e = 0; e < hits.size(); ++e) {
              if (hits[e] > 1 || (needed[e] && hits[e] == 0)) return false;
            }
            return true;
          },
          [&](const HittingSet& x) {
            const auto& els = expect<IndexSet>(cert).indices;
            const auto mask = index_mask(els, x.family.universe_size, "element");
            return std::all_of(x.family.sets.begin(), x.family.sets.end(), [&](const auto& s) {
              return std::count_if(s.begin(), s.end(), [&](std::size_t e) { return mask[e]; }) == 1;
            });
          },
          [&](const SteinerTree& x) { return verify_steiner(x, expect<RootedTree>(cert)); },
          [&](const ThreeDimMatching& x) {
            const auto& idx = expect<IndexSet>(cert).indices;
            index_mask(idx, x.family.triples.size(), "triple");
            if (idx.size() != x.family.t_size) return false;
            for (std::size_t c = 0; c < 3; ++c) {
              std::vector<bool> used(x.family.t_size, false);
              for (std::size_t i : idx) {
                const std::size_t v = x.family.triples[i][c];
                if (used[v]) return false;
                used[v] = true;
              }
            }
            return true;
          },
          [&](const Knapsack& x) {
            const auto& idx = expect<IndexSet>(cert).indices;
            index_mask(idx, x.values.size(), "item");
            BigInt sum = 0;
            for (std::size_t i : idx) sum += x.values[i];
            return sum == x.target;
          },
          [&](const JobSequencing&) -> bool {
            throw UnsupportedKind("job_sequencing has no certificate format");
          },
          [&](const Partition& x) {
            const auto& idx = expect<IndexSet>(cert).indices;
            index_mask(idx, x.values.size(), "item");
            BigInt sum = 0;
            BigInt total = 0;
            for (std::size_t i : idx) sum += x.values[i];
            for (const BigInt& v : x.values) total += v;
            return 2 * sum == total;
          },
          [&](const MaxCut& x) {
            const auto& vs = expect<IndexSet>(cert).indices;
            const auto side = index_mask(vs, x.graph.num_vertices, "vertex");
            BigInt cut = 0;
            for (std::size_t t = 0; t < x.graph.num_edges(); ++t) {
              const Edge& e = x.graph.edges[t];
              if (side[e.u] != side[e.v]) cut += x.graph.weights[t];
            }
            return cut >= x.W;
          },
      },
      instance);
}

SizeReport measure(const Problem& instance) {
  return std::visit(
      Overloaded{
          [](const Sat& x) -> SizeReport {
            std::uint64_t n = 0;
            for (const auto& c : x.formula.clauses) n += c.size();
            return {n, literal_bits(x.formula, false)};
          },
          [](const ThreeSat& x) -> SizeReport {
            return {3 * x.formula.clauses.size(), literal_bits(x.formula, true)};
          },
          [](const ZeroOneIp& x) -> SizeReport {
            return {ip_size(x.program, SizeMode::kElement), ip_size(x.program, SizeMode::kBits)};
          },
          [](const Clique& x) -> SizeReport {
            return {x.graph.num_edges() + 1, edge_bits(x.graph.edges) + bit_length(BigInt(x.k))};
          },
          [](const SetPacking& x) -> SizeReport {
            return {1 + entries(x.family), family_bits(x.family) + bit_length(BigInt(x.l))};
          },
          [](const NodeCover& x) -> SizeReport {
            return {x.graph.num_edges() + 1, edge_bits(x.graph.edges) + bit_length(BigInt(x.l))};
          },
          [](const SetCovering& x) -> SizeReport {
            return {1 + entries(x.family), family_bits(x.family) + bit_length(BigInt(x.k))};
          },
          [](const FeedbackNodeSet& x) -> SizeReport {
            return {x.graph.num_arcs() + 1, edge_bits(x.graph.arcs) + bit_length(BigInt(x.k))};
          },
          [](const FeedbackArcSet& x) -> SizeReport {
            return {x.graph.num_arcs() + 1, edge_bits(x.graph.arcs) + bit_length(BigInt(x.k))};
          },
          [](const DirectedHcp& x) -> SizeReport {
            return {x.graph.num_arcs(), edge_bits(x.graph.arcs)};
          },
          [](const UndirectedHcp& x) -> SizeReport {
            return {x.graph.num_edges(), edge_bits(x.graph.edges)};
          },
          [](const ChromaticNumber& x) -> SizeReport {
            return {x.graph.num_edges() + 1, edge_bits(x.graph.edges) + bit_length(BigInt(x.k))};
          },
          [](const CliqueCover& x) -> SizeReport {
            return {x.graph.num_edges() + 1, edge_bits(x.graph.edges) + bit_length(BigInt(x.l))};
          },
          [](const ExactCover& x) -> SizeReport {
            return {entries(x.family), family_bits(x.family)};
          },
          [](const HittingSet& x) -> SizeReport {
            return {entries(x.family), family_bits(x.family)};
          },
          [](const SteinerTree& x) -> SizeReport {
            std::uint64_t bits = edge_bits(x.graph.edges) + value_bits(x.graph.weights);
            for (std::size_t r : x.terminals) bits += index_bits(r);
            return {2 * x.graph.num_edges() + x.terminals.size() + 1, bits + bit_length(x.k)};
          },
          [](const ThreeDimMatching& x) -> SizeReport {
            std::uint64_t bits = bit_length(BigInt(x.family.t_size));
            for (const Triple& t : x.family.triples) {
              for (std::size_t c : t) bits += index_bits(c);
            }
            return {3 * x.family.triples.size() + 1, bits};
          },
          [](const Knapsack& x) -> SizeReport {
            return {x.values.size() + 1, value_bits(x.values) + bit_length(x.target)};
          },
          [](const JobSequencing&) -> SizeReport {
            throw UnsupportedKind("job_sequencing has no defined input size");
          },
          [](const Partition& x) -> SizeReport {
            return {x.values.size(), value_bits(x.values)};
          },
          [](const MaxCut& x) -> SizeReport {
            return {2 * x.graph.num_edges() + 1,
                    edge_bits(x.graph.edges) + value_bits(x.graph.weights) + bit_length(x.W)};
          },
      },
      instance);
}

std::uint64_t measure_input_size(const Problem& instance, SizeMode mode) {
  const SizeReport r = measure(instance);
  return mode == SizeMode::kElement ? r.elements : r.bits;
}

}  // namespace linorbit
