#include <doctest.h>

#include "linorbit/errors.hpp"
#include "linorbit/genlab.hpp"
#include "linorbit/growth.hpp"
#include "linorbit/json_io.hpp"
#include "linorbit/oracles.hpp"
#include "linorbit/reductions.hpp"
#include "linorbit/rng.hpp"
#include "support.hpp"

using namespace linorbit;

TEST_CASE("counter rng") {
  // SplitMix64 reference output for state 0 after one increment.
  CHECK(mix64(0) == 0xE220A8397B1DCDAFull);
  const CounterRng r(42);
  CHECK(r.draw({1, 2}) == r.draw({1, 2}));
  CHECK(r.draw({1, 2}) != r.draw({2, 1}));
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto v = r.between(3, 7, {i});
    CHECK(v >= 3);
    CHECK(v <= 7);
    const double u = r.unit({i, 9});
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("full density gives the complete graph") {
  GeneratorSpec g;
  g.kind = ProblemKind::kHcp;
  g.size = 6;
  g.density = 1.0;
  g.seed = 123;
  const auto h = std::get<UndirectedHcp>(generate(g));
  CHECK(h.graph.num_edges() == 15);
}

TEST_CASE("generation is deterministic") {
  GeneratorSpec g;
  g.kind = ProblemKind::kSat;
  g.size = 6;
  g.secondary = 4;
  g.max_clause = 5;
  g.seed = 7;
  const Problem a = generate(g);
  const Problem b = generate(g);
  CHECK(a == b);
  CHECK(to_json(a).dump() == to_json(b).dump());
  for (const auto& c : std::get<Sat>(a).formula.clauses) CHECK(c.size() <= 5);
  g.seed = 8;
  CHECK_FALSE(generate(g) == a);
}

TEST_CASE("every generated instance validates") {
  for (ProblemKind k : kAllKinds) {
    if (k == ProblemKind::kJobSequencing) continue;
    for (std::uint64_t s = 0; s < 10; ++s) {
      GeneratorSpec g;
      g.kind = k;
      g.seed = s;
      g.size = 3 + s;
      CAPTURE(tag(k));
      const Problem p = generate(g);
      CHECK(kind_of(p) == k);
      CHECK_NOTHROW(validate(p));
    }
  }
  GeneratorSpec js;
  js.kind = ProblemKind::kJobSequencing;
  CHECK_THROWS_AS(generate(js), UnsupportedKind);
}

TEST_CASE("partition instances agree with their knapsack images") {
  GeneratorSpec g;
  g.kind = ProblemKind::kPartition;
  g.size = 8;
  g.max_weight = 50;
  g.seed = 11;
  const auto p = std::get<Partition>(generate(g));
  const Knapsack ks = partition_to_knapsack(p);
  CHECK(solve(p).answer == solve(ks).answer);
  CHECK((solve(p).answer == Answer::kYes) == support::can_partition(p.values));
}

TEST_CASE("sizes grow with the scale") {
  for (std::string id : {"clique_to_ip", "sat_to_3sat", "exact_cover_to_ip", "ks_to_ip"}) {
    GeneratorSpec g = default_family(id, 5);
    std::uint64_t last = 0;
    for (std::size_t n : {4, 8, 16, 32}) {
      g.size = n;
      const std::uint64_t now = measure(generate(g)).elements;
      CAPTURE(id);
      CHECK(now > last);
      last = now;
    }
  }
}

TEST_CASE("families with planting mix YES and NO") {
  for (ProblemKind k : {ProblemKind::kExactCover, ProblemKind::kHittingSet,
                        ProblemKind::kThreeDimMatching, ProblemKind::kIp01,
                        ProblemKind::kKnapsack}) {
    std::size_t yes = 0;
    for (std::uint64_t s = 0; s < 40; ++s) {
      GeneratorSpec g;
      g.kind = k;
      g.seed = s;
      g.size = 6;
      g.secondary = 4;
      if (solve(generate(g)).answer == Answer::kYes) ++yes;
    }
    CAPTURE(tag(k));
    CHECK(yes >= 10);
    CHECK(yes < 40);
  }
}

TEST_CASE("generator contracts") {
  GeneratorSpec g;
  g.kind = ProblemKind::kClique;
  g.size = 3;
  g.param = 5;
  CHECK_THROWS_AS(generate(g), ContractViolation);
  g.param.reset();
  g.density = 1.5;
  CHECK_THROWS_AS(generate(g), ContractViolation);
}

TEST_CASE("growth audit") {
  const std::vector<std::size_t> scales{4, 8, 16};
  const GrowthReport ks = audit("ks_to_ip", default_family("ks_to_ip", 1), scales, 2);
  CHECK(ks.pass());
  CHECK(ks.pairs.size() == 6);
  CHECK(ks.max_ratio == doctest::Approx(1.0));
  for (const SizePair& p : ks.pairs) CHECK(p.in_elements == p.out_elements);

  const GrowthReport sat = audit("sat_to_3sat", default_family("sat_to_3sat", 1), scales, 2);
  CHECK(sat.pass());
  CHECK(sat.max_ratio <= 3.0);

  GeneratorSpec trees = default_family("chromatic_to_clique_cover", 1);
  trees.density = 0.0;
  const std::vector<std::size_t> big{8, 16, 32, 64};
  const GrowthReport dense = audit("chromatic_to_clique_cover", trees, big, 1);
  CHECK_FALSE(dense.linear_claim);
  CHECK_FALSE(dense.bound_holds);
  CHECK(audit("chromatic_to_clique_cover_compressed", trees, big, 1).pass());

  const GrowthReport again = audit("ks_to_ip", default_family("ks_to_ip", 1), scales, 2);
  CHECK(to_json(again).dump() == to_json(ks).dump());
  CHECK(to_table(ks).find("ks_to_ip") != std::string::npos);

  GeneratorSpec wrong = default_family("ks_to_ip", 1);
  wrong.kind = ProblemKind::kClique;
  CHECK_THROWS_AS(audit("ks_to_ip", wrong, scales, 1), ContractViolation);
  CHECK_THROWS_AS(audit("no_such", default_family("ks_to_ip", 1), scales, 1), LookupError);
}
