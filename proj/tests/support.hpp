#pragma once

// Builders and brute-force deciders written directly against the problem
// statements, without going through the library's oracles or verifiers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "linorbit/instances.hpp"

namespace support {

using namespace linorbit;

inline UGraph ug(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges,
                 std::vector<int> weights = {}) {
  UGraph g;
  g.num_vertices = n;
  for (auto [u, v] : edges) g.edges.push_back({u, v});
  for (int w : weights) g.weights.emplace_back(w);
  return g;
}

inline DiGraph dg(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> arcs) {
  DiGraph g;
  g.num_vertices = n;
  for (auto [u, v] : arcs) g.arcs.push_back({u, v});
  return g;
}

inline UGraph complete(std::size_t n) {
  UGraph g;
  g.num_vertices = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.edges.push_back({i, j});
  }
  return g;
}

inline std::vector<BigInt> bigs(std::vector<int> v) {
  return {v.begin(), v.end()};
}

inline bool bit(std::uint64_t m, std::size_t i) { return ((m >> i) & 1u) != 0; }

inline bool adjacent(const UGraph& g, std::size_t a, std::size_t b) {
  return std::any_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
    return (e.u == a && e.v == b) || (e.u == b && e.v == a);
  });
}

inline bool cnf_satisfiable(const CnfFormula& f) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.num_vars); ++m) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool any = false;
      for (Literal l : c) {
        const bool val = bit(m, static_cast<std::size_t>(std::abs(l)) - 1);
        any = any || (l > 0 ? val : !val);
      }
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

inline bool program_feasible(const BinaryProgram& p) {
  const std::size_t n = p.num_variables();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool ok = true;
    for (const auto& row : p.rows()) {
      BigInt lhs = 0;
      for (const Term& t : row.terms) {
        if (bit(m, t.var)) lhs += t.coef;
      }
      ok = ok && (row.rel == Relation::kEq   ? lhs == row.rhs
                  : row.rel == Relation::kLe ? lhs <= row.rhs
                                             : lhs >= row.rhs);
    }
    if (ok) return true;
  }
  return false;
}

inline bool has_clique(const UGraph& g, std::size_t k) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.num_vertices); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) != k) continue;
    bool ok = true;
    for (std::size_t a = 0; a < g.num_vertices; ++a) {
      for (std::size_t b = a + 1; b < g.num_vertices; ++b) {
        if (bit(m, a) && bit(m, b) && !adjacent(g, a, b)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline bool has_node_cover(const UGraph& g, std::size_t l) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.num_vertices); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) > l) continue;
    if (std::all_of(g.edges.begin(), g.edges.end(),
                    [&](const Edge& e) { return bit(m, e.u) || bit(m, e.v); })) {
      return true;
    }
  }
  return false;
}

// Subsets of sets: packing (pairwise disjoint, exactly l), covering (union is
// the union of all sets, at most k), exact cover (disjoint, union is U).
inline bool has_packing(const SetFamily& f, std::size_t l) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.sets.size()); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) != l) continue;
    std::vector<int> seen(f.universe_size, 0);
    bool ok = true;
    for (std::size_t s = 0; s < f.sets.size(); ++s) {
      if (!bit(m, s)) continue;
      for (std::size_t e : f.sets[s]) ok = ok && seen[e]++ == 0;
    }
    if (ok) return true;
  }
  return false;
}

inline bool has_covering(const SetFamily& f, std::size_t k) {
  std::vector<bool> present(f.universe_size, false);
  for (const auto& s : f.sets) {
    for (std::size_t e : s) present[e] = true;
  }
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.sets.size()); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) > k) continue;
    std::vector<bool> hit(f.universe_size, false);
    for (std::size_t s = 0; s < f.sets.size(); ++s) {
      if (bit(m, s)) {
        for (std::size_t e : f.sets[s]) hit[e] = true;
      }
    }
    if (hit == present) return true;
  }
  return false;
}

inline bool has_exact_cover(const SetFamily& f) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.sets.size()); ++m) {
    std::vector<int> seen(f.universe_size, 0);
    for (std::size_t s = 0; s < f.sets.size(); ++s) {
      if (bit(m, s)) {
        for (std::size_t e : f.sets[s]) ++seen[e];
      }
    }
    if (std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; })) return true;
  }
  return false;
}

// Hitting set: some W meets every set in exactly one element.
inline bool has_hitting_set(const SetFamily& f) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.universe_size); ++m) {
    if (std::all_of(f.sets.begin(), f.sets.end(), [&](const auto& s) {
          return std::count_if(s.begin(), s.end(), [&](std::size_t e) { return bit(m, e); }) == 1;
        })) {
      return true;
    }
  }
  return false;
}

inline bool has_matching(const TripleFamily& f) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.triples.size()); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) != f.t_size) continue;
    std::vector<int> a(f.t_size, 0), b(f.t_size, 0), c(f.t_size, 0);
    bool ok = true;
    for (std::size_t t = 0; t < f.triples.size(); ++t) {
      if (!bit(m, t)) continue;
      ok = ok && a[f.triples[t][0]]++ == 0 && b[f.triples[t][1]]++ == 0 &&
           c[f.triples[t][2]]++ == 0;
    }
    if (ok) return true;
  }
  return false;
}

inline bool subset_sums_to(const std::vector<BigInt>& values, const BigInt& target) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << values.size()); ++m) {
    BigInt s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (bit(m, i)) s += values[i];
    }
    if (s == target) return true;
  }
  return false;
}

inline bool can_partition(const std::vector<BigInt>& values) {
  BigInt total = 0;
  for (const auto& v : values) total += v;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << values.size()); ++m) {
    BigInt s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (bit(m, i)) s += values[i];
    }
    if (2 * s == total) return true;
  }
  return false;
}

inline bool has_cut(const UGraph& g, const BigInt& w) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.num_vertices); ++m) {
    BigInt cut = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (bit(m, g.edges[e].u) != bit(m, g.edges[e].v)) cut += g.weights[e];
    }
    if (cut >= w) return true;
  }
  return false;
}

// Some edge subset of weight <= k whose edges join all terminals.
inline bool has_steiner(const SteinerTree& st) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << st.graph.edges.size()); ++m) {
    BigInt w = 0;
    std::vector<std::size_t> comp(st.graph.num_vertices);
    std::iota(comp.begin(), comp.end(), 0);
    for (std::size_t e = 0; e < st.graph.edges.size(); ++e) {
      if (!bit(m, e)) continue;
      w += st.graph.weights[e];
      const std::size_t from = comp[st.graph.edges[e].v];
      const std::size_t to = comp[st.graph.edges[e].u];
      for (auto& c : comp) {
        if (c == from) c = to;
      }
    }
    if (w > st.k) continue;
    if (std::all_of(st.terminals.begin(), st.terminals.end(),
                    [&](std::size_t t) { return comp[t] == comp[st.terminals[0]]; })) {
      return true;
    }
  }
  return false;
}

inline bool colorable(const UGraph& g, std::size_t k) {
  std::vector<std::size_t> c(g.num_vertices, 0);
  const std::size_t n = g.num_vertices;
  if (n == 0) return true;
  if (k == 0) return false;
  for (;;) {
    if (std::all_of(g.edges.begin(), g.edges.end(),
                    [&](const Edge& e) { return c[e.u] != c[e.v]; })) {
      return true;
    }
    std::size_t i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

// Hamiltonian cycle by permutations fixing vertex 0.
template <class Adj>
bool hamiltonian(std::size_t n, Adj adj, std::size_t min_n) {
  if (n < min_n) return false;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = adj(order[i], order[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

inline bool ham_undirected(const UGraph& g) {
  return hamiltonian(g.num_vertices, [&](std::size_t a, std::size_t b) { return adjacent(g, a, b); },
                     3);
}

inline bool ham_directed(const DiGraph& g) {
  return hamiltonian(
      g.num_vertices,
      [&](std::size_t a, std::size_t b) {
        return std::any_of(g.arcs.begin(), g.arcs.end(),
                           [&](const Edge& e) { return e.u == a && e.v == b; });
      },
      2);
}

// Acyclic iff repeatedly deleting sinks empties the graph.
inline bool acyclic_after(const DiGraph& g, std::uint64_t drop_vertices, std::uint64_t drop_arcs) {
  std::vector<bool> alive(g.num_vertices);
  for (std::size_t v = 0; v < g.num_vertices; ++v) alive[v] = !bit(drop_vertices, v);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
      if (!alive[v]) continue;
      bool sink = true;
      for (std::size_t a = 0; a < g.arcs.size(); ++a) {
        if (!bit(drop_arcs, a) && g.arcs[a].u == v && alive[g.arcs[a].v]) sink = false;
      }
      if (sink) {
        alive[v] = false;
        changed = true;
      }
    }
  }
  return std::none_of(alive.begin(), alive.end(), [](bool b) { return b; });
}

inline bool has_fns(const DiGraph& g, std::size_t k) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.num_vertices); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) <= k && acyclic_after(g, m, 0)) {
      return true;
    }
  }
  return false;
}

inline bool has_fas(const DiGraph& g, std::size_t k) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.arcs.size()); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) <= k && acyclic_after(g, 0, m)) {
      return true;
    }
  }
  return false;
}

}  // namespace support
