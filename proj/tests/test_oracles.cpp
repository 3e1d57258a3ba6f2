#include <doctest.h>

#include "linorbit/errors.hpp"
#include "linorbit/genlab.hpp"
#include "linorbit/oracles.hpp"
#include "support.hpp"

using namespace linorbit;
using support::bigs;
using support::complete;
using support::ug;

TEST_CASE("oracle examples") {
  const OracleVerdict k4 = solve(UndirectedHcp{complete(4)});
  REQUIRE(k4.answer == Answer::kYes);
  CHECK(std::get<CycleOrder>(k4.certificate->witness).vertices.size() == 4);

  const OracleVerdict p3 = solve(Clique{ug(3, {{0, 1}, {1, 2}}), 3});
  CHECK(p3.answer == Answer::kNo);
  CHECK_FALSE(p3.certificate);
  CHECK(p3.explored <= 8);

  CHECK(solve(Partition{bigs({1, 1, 1})}).answer == Answer::kNo);
}

TEST_CASE("lexicographically first witness") {
  const OracleVerdict v = solve(Knapsack{bigs({2, 3, 5}), 5});
  REQUIRE(v.answer == Answer::kYes);
  // Indicator vectors 000, 001 ({5}) come before 110 ({2,3}).
  CHECK(std::get<IndexSet>(v.certificate->witness).indices == std::vector<std::size_t>{2});

  const OracleVerdict nc = solve(NodeCover{ug(3, {{0, 1}, {1, 2}}), 2});
  REQUIRE(nc.answer == Answer::kYes);
  CHECK(std::get<IndexSet>(nc.certificate->witness).indices == std::vector<std::size_t>{1});
}

TEST_CASE("budget refusal") {
  CHECK_THROWS_AS(solve(Partition{std::vector<BigInt>(30, BigInt(1))}, 1024), BudgetExceeded);
  UGraph pendant = complete(8);
  pendant.num_vertices = 9;
  pendant.edges.push_back({0, 8});
  CHECK_THROWS_AS(solve(UndirectedHcp{pendant}, 10), BudgetExceeded);
  CHECK(solve(UndirectedHcp{complete(9)}, 10).answer == Answer::kYes);
  CHECK_THROWS_AS(solve(JobSequencing{}), UnsupportedKind);
  CHECK_NOTHROW(solve(Partition{bigs({1, 1, 1})}, 8));
}

TEST_CASE("strategies agree") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    GeneratorSpec g;
    g.kind = ProblemKind::kKnapsack;
    g.seed = s;
    g.size = 14;
    g.max_weight = 40;
    const Problem p = generate(g);
    const OracleVerdict a = solve(p, kDefaultBudget, ScanStrategy::kReference);
    const OracleVerdict b = solve(p, kDefaultBudget, ScanStrategy::kParallel);
    CHECK(a.answer == b.answer);
    CHECK(a.certificate == b.certificate);
  }
}

TEST_CASE("oracle answers match independent deciders and verified witnesses") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorSpec g;
    g.seed = seed;
    g.size = 2 + seed % 5;
    g.density = 0.15 + 0.01 * static_cast<double>(seed);
    std::vector<std::pair<Problem, bool>> cases;

    g.kind = ProblemKind::kClique;
    g.size = std::max<std::size_t>(g.size, 3);
    const auto cl = std::get<Clique>(generate(g));
    cases.emplace_back(cl, support::has_clique(cl.graph, cl.k));
    g.kind = ProblemKind::kNodeCover;
    const auto nc = std::get<NodeCover>(generate(g));
    cases.emplace_back(nc, support::has_node_cover(nc.graph, nc.l));
    g.kind = ProblemKind::kHcp;
    const auto h = std::get<UndirectedHcp>(generate(g));
    cases.emplace_back(h, support::ham_undirected(h.graph));
    g.kind = ProblemKind::kDhcp;
    const auto dh = std::get<DirectedHcp>(generate(g));
    cases.emplace_back(dh, support::ham_directed(dh.graph));
    g.kind = ProblemKind::kChromaticNumber;
    const auto cn = std::get<ChromaticNumber>(generate(g));
    cases.emplace_back(cn, support::colorable(cn.graph, cn.k));
    g.kind = ProblemKind::kCliqueCover;
    const auto cc = std::get<CliqueCover>(generate(g));
    cases.emplace_back(cc, support::colorable(complement(cc.graph), cc.l));
    g.kind = ProblemKind::kMaxCut;
    const auto mc = std::get<MaxCut>(generate(g));
    cases.emplace_back(mc, support::has_cut(mc.graph, mc.W));
    g.kind = ProblemKind::kFeedbackNodeSet;
    const auto fn = std::get<FeedbackNodeSet>(generate(g));
    cases.emplace_back(fn, support::has_fns(fn.graph, fn.k));
    g.kind = ProblemKind::kFeedbackArcSet;
    g.size = 2 + seed % 4;
    const auto fa = std::get<FeedbackArcSet>(generate(g));
    if (fa.graph.num_arcs() <= 14) cases.emplace_back(fa, support::has_fas(fa.graph, fa.k));

    g.kind = ProblemKind::kSteinerTree;
    g.secondary = 1 + seed % 3;
    g.size = std::max<std::size_t>(g.secondary, 2 + seed % 4);
    const auto st = std::get<SteinerTree>(generate(g));
    if (st.graph.num_edges() <= 14) cases.emplace_back(st, support::has_steiner(st));

    g.kind = ProblemKind::kSat;
    g.size = 2 + seed % 5;
    g.secondary = 1 + seed % 6;
    g.max_clause = 4;
    const auto sat = std::get<Sat>(generate(g));
    cases.emplace_back(sat, support::cnf_satisfiable(sat.formula));
    g.kind = ProblemKind::kThreeSat;
    g.size = 3 + seed % 5;
    const auto ts = std::get<ThreeSat>(generate(g));
    cases.emplace_back(ts, support::cnf_satisfiable(ts.formula));
    g.kind = ProblemKind::kIp01;
    g.size = 1 + seed % 10;
    g.secondary = 1 + seed % 4;
    const auto ip = std::get<ZeroOneIp>(generate(g));
    cases.emplace_back(ip, support::program_feasible(ip.program));

    g.size = 2 + seed % 6;
    g.secondary = 1 + seed % 5;
    g.kind = ProblemKind::kSetPacking;
    const auto sp = std::get<SetPacking>(generate(g));
    cases.emplace_back(sp, support::has_packing(sp.family, sp.l));
    g.kind = ProblemKind::kSetCovering;
    const auto sc = std::get<SetCovering>(generate(g));
    cases.emplace_back(sc, support::has_covering(sc.family, sc.k));
    g.kind = ProblemKind::kExactCover;
    const auto ec = std::get<ExactCover>(generate(g));
    cases.emplace_back(ec, support::has_exact_cover(ec.family));
    g.kind = ProblemKind::kHittingSet;
    const auto hs = std::get<HittingSet>(generate(g));
    cases.emplace_back(hs, support::has_hitting_set(hs.family));
    g.kind = ProblemKind::kThreeDimMatching;
    g.secondary = 1 + seed % 3;
    const auto dm = std::get<ThreeDimMatching>(generate(g));
    cases.emplace_back(dm, support::has_matching(dm.family));
    g.kind = ProblemKind::kKnapsack;
    g.max_weight = 15;
    const auto ks = std::get<Knapsack>(generate(g));
    cases.emplace_back(ks, support::subset_sums_to(ks.values, ks.target));
    g.kind = ProblemKind::kPartition;
    const auto pt = std::get<Partition>(generate(g));
    cases.emplace_back(pt, support::can_partition(pt.values));

    for (const auto& [p, expected] : cases) {
      CAPTURE(tag(kind_of(p)));
      CAPTURE(seed);
      const OracleVerdict v = solve(p);
      CHECK((v.answer == Answer::kYes) == expected);
      CHECK(v.certificate.has_value() == expected);
      if (v.certificate) CHECK(verify_certificate(p, *v.certificate));
    }
  }
}
