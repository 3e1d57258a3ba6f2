#include "linorbit/genlab.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "linorbit/errors.hpp"
#include "linorbit/rng.hpp"

namespace linorbit {
namespace {

// Path prefixes keep the draws for different purposes independent.
enum Stream : std::uint64_t {
  kEdge = 1,
  kTreeParent,
  kWeight,
  kArc,
  kArcParent,
  kParam,
  kPlant,
  kClauseLen = 10,
  kClauseVar,
  kClauseSign,
  kMember = 20,
  kNonEmpty,
  kCoverElement,
  kBlock,
  kHit,
  kTerminal = 30,
  kTriple = 40,
  kMatching,
  kValue = 50,
  kPick,
  kCoef = 60,
  kRel,
  kPlantedBit,
};

std::size_t secondary_or(const GeneratorSpec& s, std::size_t fallback) {
  return s.secondary != 0 ? s.secondary : fallback;
}

std::size_t param_or(const GeneratorSpec& s, const CounterRng& rng, std::size_t lo,
                     std::size_t hi) {
  if (s.param) return static_cast<std::size_t>(*s.param);
  if (hi < lo) return hi;
  return static_cast<std::size_t>(rng.between(lo, hi, {kParam}));
}

UGraph random_graph(const GeneratorSpec& s, const CounterRng& rng, bool weighted) {
  UGraph g;
  g.num_vertices = s.size;
  const std::size_t n = s.size;
  std::vector<std::uint8_t> on(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (rng.chance(s.density, {kEdge, i, j})) on[i * n + j] = 1;
    }
    if (s.connected && j > 0) on[rng.below(j, {kTreeParent, j}) * n + j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!on[i * n + j]) continue;
      g.edges.push_back({i, j});
      if (weighted) g.weights.emplace_back(rng.between(1, std::max<std::uint64_t>(1, s.max_weight), {kWeight, i, j}));
    }
  }
  return g;
}

DiGraph random_digraph(const GeneratorSpec& s, const CounterRng& rng) {
  DiGraph g;
  g.num_vertices = s.size;
  const std::size_t n = s.size;
  std::vector<std::uint8_t> on(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rng.chance(s.density, {kArc, i, j})) on[i * n + j] = 1;
    }
  }
  if (s.connected && n >= 2) {
    on[0 * n + 1] = 1;
    for (std::size_t i = 1; i < n; ++i) on[i * n + rng.below(i, {kArcParent, i})] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (on[i * n + j]) g.arcs.push_back({i, j});
    }
  }
  return g;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

SetFamily random_family(const GeneratorSpec& s, const CounterRng& rng, std::size_t sets,
                        std::size_t universe, const std::vector<bool>& random_rows) {
  require(sets >= 1 && universe >= 1, "set families need at least one set and one element");
  SetFamily f;
  f.universe_size = universe;
  f.sets.resize(sets);
  for (std::size_t i = 0; i < sets; ++i) {
    if (!random_rows[i]) continue;
    for (std::size_t j = 0; j < universe; ++j) {
      if (rng.chance(s.density, {kMember, i, j})) f.sets[i].push_back(j);
    }
    if (s.connected && f.sets[i].empty()) f.sets[i].push_back(rng.below(universe, {kNonEmpty, i}));
  }
  return f;
}

void cover_every_element(SetFamily& f, const CounterRng& rng, const std::vector<bool>& random_rows) {
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    if (random_rows[i]) open.push_back(i);
  }
  if (open.empty()) return;
  std::vector<bool> covered(f.universe_size, false);
  for (const auto& set : f.sets) {
    for (std::size_t x : set) covered[x] = true;
  }
  for (std::size_t j = 0; j < f.universe_size; ++j) {
    if (covered[j]) continue;
    auto& set = f.sets[open[rng.below(open.size(), {kCoverElement, j})]];
    set.insert(std::lower_bound(set.begin(), set.end(), j), j);
  }
}

SetFamily covering_family(const GeneratorSpec& s, const CounterRng& rng) {
  const std::size_t sets = s.size;
  const std::vector<bool> all(sets, true);
  SetFamily f = random_family(s, rng, sets, secondary_or(s, s.size), all);
  if (s.connected) cover_every_element(f, rng, all);
  return f;
}

CnfFormula random_cnf(const GeneratorSpec& s, const CounterRng& rng, bool three) {
  const std::size_t m = s.size;
  require(m >= 1, "formulas need at least one variable");
  CnfFormula f;
  f.num_vars = m;
  const std::size_t n = secondary_or(s, s.size);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Literal> clause;
    if (three) {
      // Three distinct variables (fewer when m < 3) via a partial shuffle.
      std::vector<std::size_t> vars(m);
      std::iota(vars.begin(), vars.end(), 0);
      const std::size_t len = std::min<std::size_t>(3, m);
      for (std::size_t p = 0; p < len; ++p) {
        std::swap(vars[p], vars[p + rng.below(m - p, {kClauseVar, c, p})]);
      }
      for (std::size_t p = 0; p < len; ++p) {
        const auto v = static_cast<Literal>(vars[p] + 1);
        clause.push_back(rng.chance(0.5, {kClauseSign, c, p}) ? -v : v);
      }
    } else {
      const std::size_t len = rng.between(1, std::max<std::size_t>(1, s.max_clause), {kClauseLen, c});
      for (std::size_t p = 0; p < len; ++p) {
        const auto v = static_cast<Literal>(rng.below(m, {kClauseVar, c, p}) + 1);
        clause.push_back(rng.chance(0.5, {kClauseSign, c, p}) ? -v : v);
      }
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

std::vector<BigInt> random_values(const GeneratorSpec& s, const CounterRng& rng) {
  std::vector<BigInt> values;
  for (std::size_t i = 0; i < s.size; ++i) {
    values.emplace_back(rng.between(1, std::max<std::uint64_t>(1, s.max_weight), {kValue, i}));
  }
  return values;
}

ZeroOneIp random_ip(const GeneratorSpec& s, const CounterRng& rng) {
  const std::size_t n = s.size;
  const std::size_t rows = secondary_or(s, std::max<std::size_t>(1, n / 2));
  BinaryProgram p;
  std::vector<std::uint8_t> planted(n);
  for (std::size_t j = 0; j < n; ++j) {
    p.add_variable({"x", {static_cast<std::int64_t>(j + 1)}});
    planted[j] = rng.chance(0.5, {kPlantedBit, j}) ? 1 : 0;
  }
  const std::uint64_t top = std::max<std::uint64_t>(1, s.max_weight);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Term> terms;
    BigInt lhs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!rng.chance(s.density, {kCoef, r, j})) continue;
      auto c = static_cast<std::int64_t>(rng.between(1, top, {kCoef, r, j, 1}));
      if (rng.chance(0.5, {kCoef, r, j, 2})) c = -c;
      terms.push_back({j, BigInt(c)});
      if (planted[j]) lhs += c;
    }
    // The planted assignment satisfies the row unless it is nudged off by one.
    const auto rel = static_cast<Relation>(rng.below(3, {kRel, r}));
    const std::int64_t nudge = rng.chance(0.2, {kRel, r, 1}) ? 1 : 0;
    BigInt rhs = lhs;
    if (rel == Relation::kEq) rhs += nudge;
    if (rel == Relation::kLe) rhs -= nudge;
    if (rel == Relation::kGe) rhs += nudge;
    ConstraintRow row{std::move(terms), rel, rhs, std::nullopt};
    if (rel != Relation::kEq) row.slack_bound = row_local_slack_bound(row);
    p.add_row(std::move(row));
  }
  return {std::move(p)};
}

ExactCover exact_cover_family(const GeneratorSpec& s, const CounterRng& rng) {
  const std::size_t sets = s.size;
  const std::size_t universe = secondary_or(s, s.size);
  require(sets >= 1 && universe >= 1, "set families need at least one set and one element");
  // Half the instances reserve every third set for a planted exact cover.
  const bool plant = rng.chance(0.5, {kPlant});
  std::vector<bool> random_rows(sets, true);
  std::vector<std::size_t> blocks;
  if (plant) {
    for (std::size_t i = 0; i < sets; i += 3) {
      random_rows[i] = false;
      blocks.push_back(i);
    }
  }
  SetFamily f = random_family(s, rng, sets, universe, random_rows);
  if (plant) {
    for (std::size_t j = 0; j < universe; ++j) {
      f.sets[blocks[rng.below(blocks.size(), {kBlock, j})]].push_back(j);
    }
    std::erase_if(f.sets, [](const auto& set) { return set.empty(); });
  } else if (s.connected) {
    cover_every_element(f, rng, random_rows);
  }
  return {std::move(f)};
}

HittingSet hitting_family(const GeneratorSpec& s, const CounterRng& rng) {
  const std::size_t sets = s.size;
  const std::size_t universe = secondary_or(s, s.size);
  const std::vector<bool> all(sets, true);
  SetFamily f = random_family(s, rng, sets, universe, all);
  if (s.connected) cover_every_element(f, rng, all);
  if (rng.chance(0.5, {kPlant})) {
    // Plant W: each set keeps exactly one member of W.
    std::vector<bool> in_w(universe);
    for (std::size_t j = 0; j < universe; ++j) in_w[j] = rng.chance(0.4, {kHit, j});
    std::vector<std::size_t> w;
    for (std::size_t j = 0; j < universe; ++j) {
      if (in_w[j]) w.push_back(j);
    }
    if (w.empty()) {
      w.push_back(0);
      in_w[0] = true;
    }
    for (std::size_t i = 0; i < sets; ++i) {
      auto& set = f.sets[i];
      std::erase_if(set, [&](std::size_t x) { return in_w[x]; });
      const std::size_t keep = w[rng.below(w.size(), {kHit, universe, i})];
      set.insert(std::lower_bound(set.begin(), set.end(), keep), keep);
    }
  }
  return {std::move(f)};
}

ThreeDimMatching random_3dm(const GeneratorSpec& s, const CounterRng& rng) {
  const std::size_t count = s.size;
  const std::size_t t = secondary_or(s, std::max<std::size_t>(1, s.size / 2));
  require(t >= 1, "|T| must be positive");
  ThreeDimMatching out;
  out.family.t_size = t;
  std::vector<Triple> triples;
  if (rng.chance(0.5, {kPlant})) {
    std::vector<std::size_t> b(t);
    std::vector<std::size_t> c(t);
    std::iota(b.begin(), b.end(), 0);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t p = 0; p + 1 < t; ++p) {
      std::swap(b[p], b[p + rng.below(t - p, {kMatching, 1, p})]);
      std::swap(c[p], c[p + rng.below(t - p, {kMatching, 2, p})]);
    }
    for (std::size_t j = 0; j < t && triples.size() < count; ++j) triples.push_back({j, b[j], c[j]});
  }
  for (std::size_t i = 0; triples.size() < count && i < 4 * count + 16; ++i) {
    const Triple cand{rng.below(t, {kTriple, i, 0}), rng.below(t, {kTriple, i, 1}),
                      rng.below(t, {kTriple, i, 2})};
    if (std::find(triples.begin(), triples.end(), cand) == triples.end()) triples.push_back(cand);
  }
  out.family.triples = std::move(triples);
  return out;
}

SteinerTree random_steiner(const GeneratorSpec& s, const CounterRng& rng) {
  require(s.size >= 1, "Steiner instances need a vertex");
  SteinerTree st;
  st.graph = random_graph(s, rng, true);
  const std::size_t n = s.size;
  const std::size_t r = std::min(n, secondary_or(s, std::max<std::size_t>(1, n / 3)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rng.draw({kTerminal, a}) < rng.draw({kTerminal, b});
  });
  st.terminals.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(r));
  std::sort(st.terminals.begin(), st.terminals.end());
  BigInt total = 0;
  for (const BigInt& w : st.graph.weights) total += w;
  if (s.param) {
    st.k = *s.param;
  } else {
    const auto cap = static_cast<std::uint64_t>(total > 0 ? total - 1 : BigInt(0));
    st.k = rng.between(0, cap, {kParam});
  }
  return st;
}

Knapsack random_knapsack(const GeneratorSpec& s, const CounterRng& rng) {
  Knapsack k;
  k.values = random_values(s, rng);
  BigInt total = 0;
  for (const BigInt& v : k.values) total += v;
  if (s.param) {
    k.target = *s.param;
  } else if (rng.chance(0.5, {kPlant})) {
    for (std::size_t i = 0; i < k.values.size(); ++i) {
      if (rng.chance(0.5, {kPick, i})) k.target += k.values[i];
    }
  } else {
    k.target = rng.between(0, static_cast<std::uint64_t>(total), {kParam});
  }
  return k;
}

}  // namespace

Problem generate(const GeneratorSpec& spec) {
  require(spec.density >= 0.0 && spec.density <= 1.0, "density must lie in [0, 1]");
  const CounterRng rng(spec.seed);
  const std::size_t n = spec.size;
  Problem p;
  switch (spec.kind) {
    case ProblemKind::kSat: p = Sat{random_cnf(spec, rng, false)}; break;
    case ProblemKind::kThreeSat: p = ThreeSat{random_cnf(spec, rng, true)}; break;
    case ProblemKind::kIp01: p = random_ip(spec, rng); break;
    case ProblemKind::kClique:
      p = Clique{random_graph(spec, rng, false), param_or(spec, rng, std::min<std::size_t>(2, n), std::min<std::size_t>(n, 4))};
      break;
    case ProblemKind::kSetPacking: {
      SetFamily f = covering_family(spec, rng);
      const std::size_t s = f.sets.size();
      p = SetPacking{std::move(f), param_or(spec, rng, 1, std::min<std::size_t>(s, 3))};
      break;
    }
    case ProblemKind::kNodeCover:
      p = NodeCover{random_graph(spec, rng, false), param_or(spec, rng, std::min<std::size_t>(1, n), n)};
      break;
    case ProblemKind::kSetCovering: {
      SetFamily f = covering_family(spec, rng);
      const std::size_t s = f.sets.size();
      p = SetCovering{std::move(f), param_or(spec, rng, 1, s)};
      break;
    }
    case ProblemKind::kFeedbackNodeSet:
      p = FeedbackNodeSet{random_digraph(spec, rng), param_or(spec, rng, 0, 3)};
      break;
    case ProblemKind::kFeedbackArcSet:
      p = FeedbackArcSet{random_digraph(spec, rng), param_or(spec, rng, 0, 3)};
      break;
    case ProblemKind::kDhcp: p = DirectedHcp{random_digraph(spec, rng)}; break;
    case ProblemKind::kHcp: p = UndirectedHcp{random_graph(spec, rng, false)}; break;
    case ProblemKind::kChromaticNumber:
      p = ChromaticNumber{random_graph(spec, rng, false), param_or(spec, rng, std::min<std::size_t>(1, n), std::min<std::size_t>(n, 4))};
      break;
    case ProblemKind::kCliqueCover:
      p = CliqueCover{random_graph(spec, rng, false), param_or(spec, rng, std::min<std::size_t>(1, n), std::min<std::size_t>(n, 4)), false};
      break;
    case ProblemKind::kExactCover: p = exact_cover_family(spec, rng); break;
    case ProblemKind::kHittingSet: p = hitting_family(spec, rng); break;
    case ProblemKind::kSteinerTree: p = random_steiner(spec, rng); break;
    case ProblemKind::kThreeDimMatching: p = random_3dm(spec, rng); break;
    case ProblemKind::kKnapsack: p = random_knapsack(spec, rng); break;
    case ProblemKind::kJobSequencing:
      throw UnsupportedKind("job_sequencing has no data to generate");
    case ProblemKind::kPartition: p = Partition{random_values(spec, rng)}; break;
    case ProblemKind::kMaxCut: {
      UGraph g = random_graph(spec, rng, true);
      BigInt total = 0;
      for (const BigInt& w : g.weights) total += w;
      const BigInt w = spec.param ? BigInt(*spec.param)
                                  : BigInt(rng.between(0, static_cast<std::uint64_t>(total), {kParam}));
      p = MaxCut{std::move(g), w};
      break;
    }
  }
  try {
    validate(p);
  } catch (const InvalidInstance& e) {
    throw ContractViolation(std::string("generator parameters give an invalid instance: ") + e.what());
  }
  return p;
}

}  // namespace linorbit
