#include "linorbit/oracles.hpp"

#include <algorithm>
#include <string>

#include "linorbit/errors.hpp"
#include "linorbit/kernels.hpp"
#include "overloaded.hpp"

namespace linorbit {
namespace {

using detail::Overloaded;

void refuse(const std::string& what) { throw BudgetExceeded(what + " exceeds the oracle budget"); }

void check_lex_budget(std::size_t n, std::uint64_t budget) {
  if (n >= 63 || (std::uint64_t{1} << n) > budget) {
    refuse("2^" + std::to_string(n) + " candidates");
  }
}

OracleVerdict yes(Certificate cert, std::uint64_t explored) {
  return {Answer::kYes, std::move(cert), explored};
}

OracleVerdict no(std::uint64_t explored) { return {Answer::kNo, std::nullopt, explored}; }

// Indicator vectors of length n in lexicographic order.
template <class Make>
OracleVerdict lex_scan(const Problem& p, std::size_t n, std::uint64_t budget,
                       ScanStrategy strategy, Make make) {
  check_lex_budget(n, budget);
  auto pred = [&](std::uint64_t r) { return verify_certificate(p, make(r)); };
  const auto rank = strategy == ScanStrategy::kParallel ? kernels::first_rank_parallel(n, pred)
                                                        : kernels::first_rank_serial(n, pred);
  if (!rank) return no(std::uint64_t{1} << n);
  return yes(make(*rank), *rank + 1);
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
  long double acc = 1;
  std::uint64_t exact = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(cap)) return cap + 1;
    exact = exact * (n - k + i) / i;
  }
  return exact;
}

// Subsets of [0, n) of size 0..max_size, by size and then lexicographically.
template <class Make>
OracleVerdict shortlex_scan(const Problem& p, std::size_t n, std::size_t max_size,
                            std::uint64_t budget, Make make) {
  max_size = std::min(max_size, n);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= max_size; ++k) {
    total += binomial_capped(n, k, budget);
    if (total > budget) refuse("subset enumeration");
  }
  std::uint64_t explored = 0;
  for (std::size_t k = 0; k <= max_size; ++k) {
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      ++explored;
      Certificate cert = make(combo);
      if (verify_certificate(p, cert)) return yes(std::move(cert), explored);
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return no(explored);
}

class LeafCounter {
 public:
  explicit LeafCounter(std::uint64_t budget) : budget_(budget) {}
  void leaf() {
    if (++count_ > budget_) refuse("backtracking search");
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t budget_;
  std::uint64_t count_ = 0;
};

template <class Adj>
OracleVerdict cycle_search(std::size_t n, std::size_t min_n, ProblemKind kind,
                           std::uint64_t budget, const Adj& adj) {
  if (n < min_n) return no(0);
  LeafCounter leaves(budget);
  std::vector<std::size_t> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  auto dfs = [&](auto&& self) -> bool {
    const std::size_t last = path.back();
    if (path.size() == n) {
      leaves.leaf();
      return adj(last, path.front());
    }
    bool extended = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || !adj(last, v)) continue;
      extended = true;
      used[v] = true;
      path.push_back(v);
      if (self(self)) return true;
      path.pop_back();
      used[v] = false;
    }
    if (!extended) leaves.leaf();
    return false;
  };
  if (dfs(dfs)) return yes({kind, CycleOrder{path}}, leaves.count());
  return no(leaves.count());
}

OracleVerdict chromatic_search(const ChromaticNumber& x, std::uint64_t budget) {
  const std::size_t n = x.graph.num_vertices;
  const AdjacencyMatrix adj(x.graph);
  LeafCounter leaves(budget);
  std::vector<std::size_t> colors;
  auto dfs = [&](auto&& self, std::size_t used) -> bool {
    const std::size_t v = colors.size();
    if (v == n) {
      leaves.leaf();
      return true;
    }
    bool extended = false;
    for (std::size_t c = 0; c < std::min(x.k, used + 1); ++c) {
      bool clash = false;
      for (std::size_t u = 0; u < v && !clash; ++u) clash = adj(u, v) && colors[u] == c;
      if (clash) continue;
      extended = true;
      colors.push_back(c);
      if (self(self, std::max(used, c + 1))) return true;
      colors.pop_back();
    }
    if (!extended) leaves.leaf();
    return false;
  };
  if (dfs(dfs, 0)) return yes({ProblemKind::kChromaticNumber, Coloring{colors}}, leaves.count());
  return no(leaves.count());
}

OracleVerdict clique_cover_search(const CliqueCover& x, std::uint64_t budget) {
  const std::size_t n = x.graph.num_vertices;
  const AdjacencyMatrix adj = x.complemented ? AdjacencyMatrix(complement(x.graph))
                                             : AdjacencyMatrix(x.graph);
  LeafCounter leaves(budget);
  std::vector<std::vector<std::size_t>> parts;
  auto dfs = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) {
      leaves.leaf();
      return true;
    }
    bool extended = false;
    for (std::size_t i = 0; i <= parts.size() && i < x.l; ++i) {
      if (i == parts.size()) {
        parts.push_back({v});
      } else {
        const auto& part = parts[i];
        if (!std::all_of(part.begin(), part.end(), [&](std::size_t u) { return adj(u, v); })) {
          continue;
        }
        parts[i].push_back(v);
      }
      extended = true;
      if (self(self, v + 1)) return true;
      if (parts[i].size() == 1) {
        parts.pop_back();
      } else {
        parts[i].pop_back();
      }
    }
    if (!extended) leaves.leaf();
    return false;
  };
  if (dfs(dfs, 0)) return yes({ProblemKind::kCliqueCover, CliquePartition{parts}}, leaves.count());
  return no(leaves.count());
}

}  // namespace

OracleVerdict solve(const Problem& instance, std::uint64_t budget, ScanStrategy strategy) {
  validate(instance);
  const ProblemKind kind = kind_of(instance);
  auto index_set = [kind](std::size_t n) {
    return [kind, n](std::uint64_t r) {
      return Certificate{kind, IndexSet{kernels::rank_to_indices(r, n)}};
    };
  };
  auto combo_set = [kind](const std::vector<std::size_t>& c) {
    return Certificate{kind, IndexSet{c}};
  };
  auto truth = [kind](std::size_t n) {
    return [kind, n](std::uint64_t r) {
      TruthAssignment a;
      a.values.resize(n);
      for (std::size_t i = 0; i < n; ++i) a.values[i] = kernels::rank_bit(r, n, i);
      return Certificate{kind, a};
    };
  };
  return std::visit(
      Overloaded{
          [&](const Sat& x) {
            return lex_scan(instance, x.formula.num_vars, budget, strategy, truth(x.formula.num_vars));
          },
          [&](const ThreeSat& x) {
            return lex_scan(instance, x.formula.num_vars, budget, strategy, truth(x.formula.num_vars));
          },
          [&](const ZeroOneIp& x) {
            const std::size_t n = x.program.num_variables();
            check_lex_budget(n, budget);
            const IpResult r = solve_ip(x.program, std::max<std::size_t>(n, kDefaultVarCap), strategy);
            if (!r.feasible) return no(r.explored);
            return yes({kind, BinaryVector{r.assignment}}, r.explored);
          },
          [&](const Clique& x) {
            return lex_scan(instance, x.graph.num_vertices, budget, strategy,
                            index_set(x.graph.num_vertices));
          },
          [&](const SetPacking& x) {
            return lex_scan(instance, x.family.sets.size(), budget, strategy,
                            index_set(x.family.sets.size()));
          },
          [&](const NodeCover& x) {
            return shortlex_scan(instance, x.graph.num_vertices, x.l, budget, combo_set);
          },
          [&](const SetCovering& x) {
            return shortlex_scan(instance, x.family.sets.size(), x.k, budget, combo_set);
          },
          [&](const FeedbackNodeSet& x) {
            return shortlex_scan(instance, x.graph.num_vertices, x.k, budget, combo_set);
          },
          [&](const FeedbackArcSet& x) {
            return shortlex_scan(instance, x.graph.num_arcs(), x.k, budget, combo_set);
          },
          [&](const DirectedHcp& x) {
            const std::size_t n = x.graph.num_vertices;
            std::vector<bool> arc(n * n, false);
            for (const Edge& a : x.graph.arcs) arc[a.u * n + a.v] = true;
            return cycle_search(n, 2, kind, budget,
                                [&](std::size_t u, std::size_t v) { return arc[u * n + v]; });
          },
          [&](const UndirectedHcp& x) {
            const AdjacencyMatrix adj(x.graph);
            return cycle_search(x.graph.num_vertices, 3, kind, budget,
                                [&](std::size_t u, std::size_t v) { return adj(u, v); });
          },
          [&](const ChromaticNumber& x) { return chromatic_search(x, budget); },
          [&](const CliqueCover& x) { return clique_cover_search(x, budget); },
          [&](const ExactCover& x) {
            return lex_scan(instance, x.family.sets.size(), budget, strategy,
                            index_set(x.family.sets.size()));
          },
          [&](const HittingSet& x) {
            return lex_scan(instance, x.family.universe_size, budget, strategy,
                            index_set(x.family.universe_size));
          },
          [&](const SteinerTree& x) {
            const std::size_t e = x.graph.num_edges();
            const std::size_t root = x.terminals.front();
            return lex_scan(instance, e, budget, strategy, [&](std::uint64_t r) {
              return Certificate{kind, RootedTree{root, kernels::rank_to_indices(r, e)}};
            });
          },
          [&](const ThreeDimMatching& x) {
            return lex_scan(instance, x.family.triples.size(), budget, strategy,
                            index_set(x.family.triples.size()));
          },
          [&](const Knapsack& x) {
            return lex_scan(instance, x.values.size(), budget, strategy, index_set(x.values.size()));
          },
          [&](const JobSequencing&) -> OracleVerdict {
            throw UnsupportedKind("job_sequencing has no data to search");
          },
          [&](const Partition& x) {
            return lex_scan(instance, x.values.size(), budget, strategy, index_set(x.values.size()));
          },
          [&](const MaxCut& x) {
            return lex_scan(instance, x.graph.num_vertices, budget, strategy,
                            index_set(x.graph.num_vertices));
          },
      },
      instance);
}

}  // namespace linorbit
