#include "linorbit/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "linorbit/errors.hpp"

namespace linorbit {
namespace {

using Index = std::int64_t;

Index one_based(std::size_t i) { return static_cast<Index>(i) + 1; }

Term term(std::size_t var, long coef) { return {var, BigInt(coef)}; }

std::size_t literal_var(Literal lit) {
  return static_cast<std::size_t>(lit < 0 ? -static_cast<std::int64_t>(lit) : lit);
}

const std::vector<std::uint8_t>& checked_vector(const BinaryVector& v, std::size_t expected) {
  if (v.values.size() != expected) {
    throw InvalidCertificate("binary vector has " + std::to_string(v.values.size()) +
                             " entries, the program has " + std::to_string(expected));
  }
  return v.values;
}

std::vector<std::size_t> ones(const std::vector<std::uint8_t>& x, std::size_t from,
                              std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (x[from + i]) out.push_back(i);
  }
  return out;
}

// For each element of U, the indices of the sets containing it.
std::vector<std::vector<std::size_t>> element_incidence(const SetFamily& fam) {
  std::vector<std::vector<std::size_t>> in(fam.universe_size);
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    for (std::size_t j : fam.sets[i]) in[j].push_back(i);
  }
  return in;
}

std::vector<std::size_t> declare_sets(BinaryProgram& p, std::size_t s) {
  std::vector<std::size_t> x(s);
  for (std::size_t i = 0; i < s; ++i) x[i] = p.add_variable({"x", {one_based(i)}});
  return x;
}

std::vector<Term> all_of_weight_one(const std::vector<std::size_t>& vars) {
  std::vector<Term> t;
  t.reserve(vars.size());
  for (std::size_t v : vars) t.push_back(term(v, 1));
  return t;
}

}  // namespace

// --- SAT -> 3-SAT -----------------------------------------------------------

ThreeSat sat_to_3sat(const Sat& src) {
  ThreeSat out;
  out.formula.num_vars = src.formula.num_vars;
  for (const auto& clause : src.formula.clauses) {
    const std::size_t k = clause.size();
    if (k <= 3) {
      out.formula.clauses.push_back(clause);
      continue;
    }
    const auto first = static_cast<Literal>(out.formula.num_vars + 1);
    out.formula.num_vars += k - 3;
    out.formula.clauses.push_back({clause[0], clause[1], first});
    for (std::size_t j = 1; j + 3 < k; ++j) {
      const auto y = static_cast<Literal>(first + static_cast<Literal>(j));
      out.formula.clauses.push_back({-(y - 1), clause[j + 1], y});
    }
    const auto last = static_cast<Literal>(first + static_cast<Literal>(k - 4));
    out.formula.clauses.push_back({-last, clause[k - 2], clause[k - 1]});
  }
  return out;
}

TruthAssignment lift_sat_to_3sat(const Sat& src, const TruthAssignment& target) {
  std::size_t expected = src.formula.num_vars;
  for (const auto& c : src.formula.clauses) expected += c.size() > 3 ? c.size() - 3 : 0;
  if (target.values.size() != expected) {
    throw InvalidCertificate("assignment length does not match the 3-SAT image");
  }
  return {std::vector<bool>(target.values.begin(),
                            target.values.begin() + static_cast<std::ptrdiff_t>(src.formula.num_vars))};
}

// --- Clique -> IP -----------------------------------------------------------

ZeroOneIp clique_to_ip(const Clique& src) {
  const UGraph& g = src.graph;
  BinaryProgram p;
  std::vector<std::size_t> v(g.num_vertices);
  for (std::size_t i = 0; i < g.num_vertices; ++i) v[i] = p.add_variable({"v", {one_based(i)}});
  std::vector<std::size_t> x(g.num_edges());
  for (std::size_t t = 0; t < g.num_edges(); ++t) {
    x[t] = p.add_variable({"x", {one_based(g.edges[t].u), one_based(g.edges[t].v)}});
  }
  for (std::size_t t = 0; t < g.num_edges(); ++t) {
    const std::size_t vi = v[g.edges[t].u];
    const std::size_t vj = v[g.edges[t].v];
    p.add_row({term(x[t], 1), term(vi, -1), term(vj, -1)}, Relation::kGe, -1, BigInt(1));
    p.add_row({term(x[t], 1), term(vi, -1)}, Relation::kLe, 0, BigInt(1));
    p.add_row({term(x[t], 1), term(vj, -1)}, Relation::kLe, 0, BigInt(1));
  }
  p.add_row(all_of_weight_one(v), Relation::kEq, BigInt(src.k));
  p.add_row(all_of_weight_one(x), Relation::kEq, BigInt(src.k * (src.k - (src.k > 0 ? 1 : 0)) / 2));
  return {std::move(p)};
}

IndexSet lift_clique_to_ip(const Clique& src, const BinaryVector& target) {
  const auto& x = checked_vector(target, src.graph.num_vertices + src.graph.num_edges());
  return {ones(x, 0, src.graph.num_vertices)};
}

// --- Set Packing -> IP ------------------------------------------------------

ZeroOneIp set_packing_to_ip(const SetPacking& src) {
  BinaryProgram p;
  const auto x = declare_sets(p, src.family.sets.size());
  for (const auto& sets : element_incidence(src.family)) {
    std::vector<Term> row;
    for (std::size_t i : sets) row.push_back(term(x[i], 1));
    p.add_row(std::move(row), Relation::kLe, 1, BigInt(1));
  }
  p.add_row(all_of_weight_one(x), Relation::kEq, BigInt(src.l));
  return {std::move(p)};
}

IndexSet lift_set_packing_to_ip(const SetPacking& src, const BinaryVector& target) {
  return {ones(checked_vector(target, src.family.sets.size()), 0, src.family.sets.size())};
}

// --- Node Cover -> Set Covering ---------------------------------------------

SetCovering node_cover_to_set_covering(const NodeCover& src) {
  SetCovering out;
  out.family.universe_size = src.graph.num_edges();
  out.family.sets.resize(src.graph.num_vertices);
  for (std::size_t t = 0; t < src.graph.num_edges(); ++t) {
    out.family.sets[src.graph.edges[t].u].push_back(t);
    out.family.sets[src.graph.edges[t].v].push_back(t);
  }
  out.k = src.l;
  return out;
}

IndexSet lift_node_cover_to_set_covering(const NodeCover& src, const IndexSet& target) {
  for (std::size_t i : target.indices) {
    if (i >= src.graph.num_vertices) throw InvalidCertificate("set index out of range");
  }
  return target;
}

// --- Set Covering -> IP -----------------------------------------------------

ZeroOneIp set_covering_to_ip(const SetCovering& src) {
  BinaryProgram p;
  const std::size_t s = src.family.sets.size();
  const auto x = declare_sets(p, s);
  for (const auto& sets : element_incidence(src.family)) {
    if (sets.empty()) continue;
    std::vector<Term> row;
    for (std::size_t i : sets) row.push_back(term(x[i], 1));
    p.add_row(std::move(row), Relation::kGe, 1, BigInt(sets.size() - 1));
  }
  p.add_row(all_of_weight_one(x), Relation::kEq, BigInt(std::min(src.k, s)));
  return {std::move(p)};
}

IndexSet lift_set_covering_to_ip(const SetCovering& src, const BinaryVector& target) {
  return {ones(checked_vector(target, src.family.sets.size()), 0, src.family.sets.size())};
}

// --- Feedback Arc Set -> Feedback Node Set ----------------------------------

FasExpansion expand_for_fas(const DiGraph& g) {
  // Gadget positions per vertex: incoming arcs first, then outgoing, each in
  // arc-list order.
  std::vector<std::vector<std::size_t>> attached(g.num_vertices);
  for (std::size_t a = 0; a < g.num_arcs(); ++a) attached[g.arcs[a].v].push_back(a);
  for (std::size_t a = 0; a < g.num_arcs(); ++a) attached[g.arcs[a].u].push_back(a);
  std::vector<std::size_t> offset(g.num_vertices + 1, 0);
  for (std::size_t i = 0; i < g.num_vertices; ++i) offset[i + 1] = offset[i] + attached[i].size();
  std::vector<std::size_t> in_pos(g.num_arcs());
  std::vector<std::size_t> out_pos(g.num_arcs());
  for (std::size_t i = 0; i < g.num_vertices; ++i) {
    for (std::size_t p = 0; p < attached[i].size(); ++p) {
      const std::size_t a = attached[i][p];
      (g.arcs[a].v == i ? in_pos : out_pos)[a] = offset[i] + p;
    }
  }
  FasExpansion ex;
  ex.expanded.num_vertices = offset.back();
  for (std::size_t a = 0; a < g.num_arcs(); ++a) {
    ex.expanded.arcs.push_back({out_pos[a], in_pos[a]});
    ex.origin_arc.push_back(a);
  }
  ex.external_arcs = g.num_arcs();
  for (std::size_t i = 0; i < g.num_vertices; ++i) {
    for (std::size_t p = 0; p + 1 < attached[i].size(); ++p) {
      const std::size_t here = offset[i] + p;
      ex.expanded.arcs.push_back({here, here + 1});
      ex.expanded.arcs.push_back({here + 1, here});
      ex.origin_arc.push_back(attached[i][p + 1]);
      ex.origin_arc.push_back(attached[i][p + 1]);
    }
  }
  return ex;
}

FeedbackNodeSet fas_to_fns(const FeedbackArcSet& src) {
  return {line_graph(expand_for_fas(src.graph).expanded), src.k};
}

IndexSet lift_fas_to_fns(const FeedbackArcSet& src, const IndexSet& target) {
  const FasExpansion ex = expand_for_fas(src.graph);
  std::set<std::size_t> arcs;
  for (std::size_t node : target.indices) {
    if (node >= ex.origin_arc.size()) throw InvalidCertificate("line-graph node out of range");
    arcs.insert(ex.origin_arc[node]);
  }
  return {{arcs.begin(), arcs.end()}};
}

// --- Directed HCP -> Undirected HCP -----------------------------------------

UndirectedHcp dhcp_to_hcp(const DirectedHcp& src) {
  UndirectedHcp out;
  out.graph.num_vertices = 3 * src.graph.num_vertices;
  for (std::size_t i = 0; i < src.graph.num_vertices; ++i) {
    out.graph.edges.push_back({3 * i, 3 * i + 1});
    out.graph.edges.push_back({3 * i + 1, 3 * i + 2});
  }
  for (const Edge& a : src.graph.arcs) out.graph.edges.push_back({3 * a.u + 2, 3 * a.v});
  return out;
}

CycleOrder lift_dhcp_to_hcp(const DirectedHcp& src, const CycleOrder& target) {
  const std::size_t n = src.graph.num_vertices;
  const auto& cyc = target.vertices;
  if (cyc.size() != 3 * n) throw InvalidCertificate("cycle length differs from 3N");
  if (n == 0) return {};
  std::vector<std::size_t> pos(3 * n, cyc.size());
  for (std::size_t p = 0; p < cyc.size(); ++p) {
    if (cyc[p] >= 3 * n || pos[cyc[p]] != cyc.size()) {
      throw InvalidCertificate("cycle repeats or leaves the vertex range");
    }
    pos[cyc[p]] = p;
  }
  // Walk in the direction that enters gadget 0 at its first vertex.
  const std::size_t len = cyc.size();
  const bool forward = cyc[(pos[0] + 1) % len] == 1;
  CycleOrder out;
  for (std::size_t step = 0; step < len; ++step) {
    const std::size_t p = forward ? (pos[0] + step) % len : (pos[0] + len - step) % len;
    if (cyc[p] % 3 == 0) out.vertices.push_back(cyc[p] / 3);
  }
  return out;
}

// --- 3-SAT -> IP ------------------------------------------------------------

ZeroOneIp threesat_to_ip(const ThreeSat& src) {
  BinaryProgram p;
  for (std::size_t j = 0; j < src.formula.num_vars; ++j) p.add_variable({"x", {one_based(j)}});
  for (const auto& clause : src.formula.clauses) {
    std::set<Literal> distinct(clause.begin(), clause.end());
    std::vector<Term> row;
    long negated = 0;
    for (Literal lit : distinct) {
      row.push_back(term(literal_var(lit) - 1, lit > 0 ? 1 : -1));
      if (lit < 0) ++negated;
    }
    // Net coefficients after merging x and its complement in one clause.
    std::vector<BigInt> net(src.formula.num_vars, 0);
    for (const Term& t : row) net[t.var] += t.coef;
    BigInt top = 0;
    for (const BigInt& c : net) {
      if (c > 0) top += c;
    }
    const BigInt rhs = 1 - negated;
    const BigInt gap = top - rhs;
    p.add_row(std::move(row), Relation::kGe, rhs, gap < 0 ? BigInt(0) : gap);
  }
  return {std::move(p)};
}

TruthAssignment lift_threesat_to_ip(const ThreeSat& src, const BinaryVector& target) {
  const auto& x = checked_vector(target, src.formula.num_vars);
  TruthAssignment a;
  a.values.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) a.values[j] = x[j] != 0;
  return a;
}

// --- Exact Cover -> IP ------------------------------------------------------

ZeroOneIp exact_cover_to_ip(const ExactCover& src) {
  BinaryProgram p;
  const auto x = declare_sets(p, src.family.sets.size());
  for (const auto& sets : element_incidence(src.family)) {
    if (sets.empty()) continue;
    std::vector<Term> row;
    for (std::size_t i : sets) row.push_back(term(x[i], 1));
    p.add_row(std::move(row), Relation::kEq, 1);
  }
  return {std::move(p)};
}

IndexSet lift_exact_cover_to_ip(const ExactCover& src, const BinaryVector& target) {
  return {ones(checked_vector(target, src.family.sets.size()), 0, src.family.sets.size())};
}

// --- Hitting Set -> IP ------------------------------------------------------

ZeroOneIp hitting_set_to_ip(const HittingSet& src) {
  BinaryProgram p;
  const auto x = declare_sets(p, src.family.universe_size);
  for (const auto& set : src.family.sets) {
    std::vector<Term> row;
    for (std::size_t j : set) row.push_back(term(x[j], 1));
    p.add_row(std::move(row), Relation::kEq, 1);
  }
  return {std::move(p)};
}

IndexSet lift_hitting_set_to_ip(const HittingSet& src, const BinaryVector& target) {
  return {ones(checked_vector(target, src.family.universe_size), 0, src.family.universe_size)};
}

// --- Steiner Tree -> IP -----------------------------------------------------

bool steiner_weight_row_needed(const SteinerTree& src) {
  BigInt total = 0;
  for (const BigInt& w : src.graph.weights) total += w;
  return src.k < total;
}

ZeroOneIp steiner_tree_to_ip(const SteinerTree& src) {
  const UGraph& g = src.graph;
  const std::size_t n = g.num_vertices;
  BinaryProgram p;
  // Arc 2t runs u -> v along edge t, arc 2t + 1 runs v -> u.
  std::vector<Edge> arcs;
  std::vector<BigInt> arc_weight;
  for (std::size_t t = 0; t < g.num_edges(); ++t) {
    arcs.push_back(g.edges[t]);
    arcs.push_back({g.edges[t].v, g.edges[t].u});
    arc_weight.push_back(g.weights[t]);
    arc_weight.push_back(g.weights[t]);
  }
  std::vector<std::size_t> x(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    x[a] = p.add_variable({"x", {one_based(arcs[a].u), one_based(arcs[a].v)}});
  }
  std::vector<std::size_t> y(n);
  std::vector<std::size_t> z(n);
  for (std::size_t j = 0; j < n; ++j) y[j] = p.add_variable({"y", {one_based(j)}});
  for (std::size_t j = 0; j < n; ++j) z[j] = p.add_variable({"z", {one_based(j)}});

  p.add_row(all_of_weight_one(z), Relation::kEq, 1);
  std::vector<bool> terminal(n, false);
  for (std::size_t r : src.terminals) terminal[r] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (terminal[j]) {
      p.add_row({term(y[j], 1), term(z[j], 1)}, Relation::kEq, 1);
    } else {
      p.add_row({term(y[j], 1), term(z[j], 1)}, Relation::kLe, 1, BigInt(1));
    }
  }
  std::vector<std::vector<std::size_t>> incoming(n);
  for (std::size_t a = 0; a < arcs.size(); ++a) incoming[arcs[a].v].push_back(a);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Term> row{term(y[j], 1)};
    for (std::size_t a : incoming[j]) row.push_back(term(x[a], -1));
    p.add_row(std::move(row), Relation::kEq, 0);
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    p.add_row({term(x[a], 1), term(y[arcs[a].u], -1), term(z[arcs[a].u], -1)}, Relation::kLe, 0,
              BigInt(1));
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    p.add_row({term(x[a], 1), term(z[arcs[a].v], 1)}, Relation::kLe, 1, BigInt(1));
  }
  if (steiner_weight_row_needed(src)) {
    std::vector<Term> row;
    for (std::size_t a = 0; a < arcs.size(); ++a) row.push_back({x[a], arc_weight[a]});
    p.add_row(std::move(row), Relation::kLe, src.k, src.k);
  }
  return {std::move(p)};
}

RootedTree lift_steiner_tree_to_ip(const SteinerTree& src, const BinaryVector& target) {
  const std::size_t e = src.graph.num_edges();
  const std::size_t n = src.graph.num_vertices;
  const auto& x = checked_vector(target, 2 * e + 2 * n);
  RootedTree tree;
  tree.root = src.terminals.front();
  for (std::size_t j = 0; j < n; ++j) {
    if (x[2 * e + n + j]) {
      tree.root = j;
      break;
    }
  }
  for (std::size_t t = 0; t < e; ++t) {
    if (x[2 * t] || x[2 * t + 1]) tree.edges.push_back(t);
  }
  return tree;
}

// --- 3-Dimensional Matching -> IP -------------------------------------------

ZeroOneIp three_dim_matching_to_ip(const ThreeDimMatching& src) {
  BinaryProgram p;
  const auto x = declare_sets(p, src.family.triples.size());
  for (std::size_t j = 0; j < src.family.t_size; ++j) {
    for (std::size_t c = 0; c < 3; ++c) {
      std::vector<Term> row;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (src.family.triples[i][c] == j) row.push_back(term(x[i], 1));
      }
      p.add_row(std::move(row), Relation::kEq, 1);
    }
  }
  return {std::move(p)};
}

IndexSet lift_three_dim_matching_to_ip(const ThreeDimMatching& src, const BinaryVector& target) {
  const std::size_t u = src.family.triples.size();
  return {ones(checked_vector(target, u), 0, u)};
}

// --- Knapsack -> IP ---------------------------------------------------------

ZeroOneIp knapsack_to_ip(const Knapsack& src) {
  BinaryProgram p;
  const auto x = declare_sets(p, src.values.size());
  std::vector<Term> row;
  for (std::size_t i = 0; i < x.size(); ++i) row.push_back({x[i], src.values[i]});
  p.add_row(std::move(row), Relation::kEq, src.target);
  return {std::move(p)};
}

IndexSet lift_knapsack_to_ip(const Knapsack& src, const BinaryVector& target) {
  return {ones(checked_vector(target, src.values.size()), 0, src.values.size())};
}

// --- Partition -> Knapsack --------------------------------------------------

Knapsack partition_to_knapsack(const Partition& src) {
  BigInt total = 0;
  for (const BigInt& c : src.values) total += c;
  // An odd total cannot be halved; total + 1 is out of reach of positive values.
  return {src.values, total % 2 == 0 ? BigInt(total / 2) : BigInt(total + 1)};
}

IndexSet lift_partition_to_knapsack(const Partition& src, const IndexSet& target) {
  for (std::size_t i : target.indices) {
    if (i >= src.values.size()) throw InvalidCertificate("item index out of range");
  }
  return target;
}

// --- Max Cut -> IP ----------------------------------------------------------

ZeroOneIp max_cut_to_ip(const MaxCut& src) {
  const UGraph& g = src.graph;
  BinaryProgram p;
  std::vector<std::size_t> x(g.num_vertices);
  for (std::size_t i = 0; i < g.num_vertices; ++i) x[i] = p.add_variable({"x", {one_based(i)}});
  std::vector<std::size_t> y(g.num_edges());
  BigInt total = 0;
  for (std::size_t t = 0; t < g.num_edges(); ++t) {
    y[t] = p.add_variable({"y", {one_based(g.edges[t].u), one_based(g.edges[t].v)}});
    total += g.weights[t];
  }
  for (std::size_t t = 0; t < g.num_edges(); ++t) {
    const std::size_t xi = x[g.edges[t].u];
    const std::size_t xj = x[g.edges[t].v];
    p.add_row({term(y[t], 1), term(xi, -1), term(xj, 1)}, Relation::kLe, 1, BigInt(2));
    p.add_row({term(y[t], 1), term(xj, -1), term(xi, 1)}, Relation::kLe, 1, BigInt(2));
    p.add_row({term(y[t], 1), term(xi, 1), term(xj, 1)}, Relation::kGe, 1, BigInt(2));
    p.add_row({term(y[t], 1), term(xi, -1), term(xj, -1)}, Relation::kGe, -1, BigInt(2));
  }
  std::vector<Term> row;
  for (std::size_t t = 0; t < g.num_edges(); ++t) row.push_back({y[t], g.weights[t]});
  const BigInt rhs = total - src.W;
  p.add_row(std::move(row), Relation::kLe, rhs, rhs < 0 ? BigInt(0) : rhs);
  return {std::move(p)};
}

IndexSet lift_max_cut_to_ip(const MaxCut& src, const BinaryVector& target) {
  const std::size_t n = src.graph.num_vertices;
  const auto& x = checked_vector(target, n + src.graph.num_edges());
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) s.indices.push_back(i);
  }
  return s;
}

// --- Chromatic Number -> Clique Cover ---------------------------------------

CliqueCover chromatic_to_clique_cover(const ChromaticNumber& src, CliqueCoverStorage storage) {
  if (storage == CliqueCoverStorage::kCompressed) return {src.graph, src.k, true};
  return {complement(src.graph), src.k, false};
}

Coloring lift_chromatic_to_clique_cover(const ChromaticNumber& src,
                                        const CliquePartition& target) {
  const std::size_t n = src.graph.num_vertices;
  Coloring c;
  c.colors.assign(n, n);
  for (std::size_t part = 0; part < target.cliques.size(); ++part) {
    for (std::size_t v : target.cliques[part]) {
      if (v >= n || c.colors[v] != n) {
        throw InvalidCertificate("clique partition repeats or leaves the vertex range");
      }
      c.colors[v] = part;
    }
  }
  if (std::find(c.colors.begin(), c.colors.end(), n) != c.colors.end()) {
    throw InvalidCertificate("clique partition misses a vertex");
  }
  return c;
}

}  // namespace linorbit
