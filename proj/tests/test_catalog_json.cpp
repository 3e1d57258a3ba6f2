#include <doctest.h>

#include <sstream>

#include "linorbit/errors.hpp"
#include "linorbit/genlab.hpp"
#include "linorbit/json_io.hpp"
#include "linorbit/oracles.hpp"
#include "linorbit/reductions.hpp"
#include "support.hpp"

using namespace linorbit;
using support::bigs;

TEST_CASE("catalog") {
  const auto& cat = reduction_catalog();
  CHECK(cat.size() == 17);
  CHECK(find_reduction("sat_to_3sat").target == ProblemKind::kThreeSat);
  CHECK(find_reduction("part_to_ks").growth == AffineBound{1, 1});
  CHECK_FALSE(find_reduction("chromatic_to_clique_cover").linear);
  CHECK_THROWS_AS(find_reduction("3sat_to_hcp"), LookupError);
  CHECK_THROWS_AS(find_reduction("ks_to_ip").transform(Partition{bigs({1})}), KindMismatch);
}

TEST_CASE("chains compose") {
  const std::vector<std::string> ids{"part_to_ks", "ks_to_ip"};
  const ReductionChain chain = ReductionChain::from_ids(ids);
  const auto ip = std::get<ZeroOneIp>(compose(chain, Partition{bigs({1, 2, 3})}));
  REQUIRE(ip.program.num_rows() == 1);
  const ConstraintRow& row = ip.program.rows()[0];
  CHECK(row.rel == Relation::kEq);
  CHECK(row.rhs == 3);
  REQUIRE(row.terms.size() == 3);
  CHECK(row.terms[2].coef == 3);
  CHECK(chain.growth() == AffineBound{1, 1});

  const ReductionChain empty;
  CHECK(compose(empty, Partition{bigs({4})}) == Problem{Partition{bigs({4})}});

  const std::vector<std::string> sat_ids{"sat_to_3sat", "3sat_to_ip"};
  const ReductionChain sat_chain = ReductionChain::from_ids(sat_ids);
  const Sat four{{4, {{1, 2, 3, 4}}}};
  const ChainRun run = run_chain(sat_chain, four);
  const auto& out = std::get<ZeroOneIp>(run.output()).program;
  CHECK(out.num_rows() == 2);
  CHECK(out.nonzeros() == 6);
  const OracleVerdict v = solve(run.output());
  REQUIRE(v.answer == Answer::kYes);
  CHECK(verify_certificate(four, lift_chain(sat_chain, run, *v.certificate)));

  const std::vector<std::string> bad{"ks_to_ip", "part_to_ks"};
  CHECK_THROWS_AS(ReductionChain::from_ids(bad), KindMismatch);
}

TEST_CASE("kernel routing") {
  CHECK(route_to_kernel(ProblemKind::kIp01).empty());
  CHECK(route_to_kernel(ProblemKind::kPartition).ids() ==
        std::vector<std::string>{"part_to_ks", "ks_to_ip"});
  CHECK(route_to_kernel(ProblemKind::kFeedbackArcSet).ids() ==
        std::vector<std::string>{"fas_to_fns"});
  CHECK(route_to_kernel(ProblemKind::kSat).ids() ==
        std::vector<std::string>{"sat_to_3sat", "3sat_to_ip"});
  CHECK(route_to_kernel(ProblemKind::kNodeCover).ids() ==
        std::vector<std::string>{"nc_to_sc", "sc_to_ip"});
  CHECK(route_to_kernel(ProblemKind::kDhcp).ids() == std::vector<std::string>{"dhcp_to_hcp"});
  CHECK(route_to_kernel(ProblemKind::kMaxCut).ids() == std::vector<std::string>{"max_cut_to_ip"});
  std::size_t kernel = 0;
  for (ProblemKind k : kAllKinds) kernel += is_kernel(k) ? 1 : 0;
  CHECK(kernel == 6);
}

TEST_CASE("kind tags") {
  for (ProblemKind k : kAllKinds) CHECK(parse_kind(tag(k)) == k);
  CHECK(tag(ProblemKind::kThreeDimMatching) == "three_dim_matching");
  CHECK(karp_number(ProblemKind::kMaxCut) == 21);
  CHECK_THROWS_AS(parse_kind("tsp"), ParseError);
}

TEST_CASE("instance and certificate round trips") {
  for (ProblemKind k : kAllKinds) {
    if (k == ProblemKind::kJobSequencing) continue;
    for (std::uint64_t s = 0; s < 4; ++s) {
      GeneratorSpec g;
      g.kind = k;
      g.seed = s;
      g.size = 5;
      const Problem p = generate(g);
      CAPTURE(tag(k));
      const Json j = to_json(p);
      CHECK(j["kind"] == tag(k));
      CHECK(problem_from_json(Json::parse(j.dump())) == p);
      const OracleVerdict v = solve(p);
      if (v.certificate) {
        CHECK(certificate_from_json(Json::parse(to_json(*v.certificate).dump())) ==
              *v.certificate);
      }
    }
  }
  const Json js = to_json(Problem{JobSequencing{}});
  CHECK(problem_from_json(js) == Problem{JobSequencing{}});
}

TEST_CASE("wire format is 1-based") {
  const Json j = to_json(Problem{Clique{support::ug(2, {{0, 1}}), 2}});
  CHECK(j["payload"]["edges"][0] == Json::array({1, 2}));
  const Json c = to_json(Certificate{ProblemKind::kChromaticNumber, Coloring{{0, 1}}});
  CHECK(c["colors"] == Json::array({1, 2}));
  CHECK_THROWS_AS(problem_from_json(Json::parse(
                      R"({"kind":"clique","payload":{"num_vertices":2,"edges":[[0,1]],"k":1}})")),
                  ParseError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"kind":"clique"})")), ParseError);
  CHECK_THROWS_AS(
      problem_from_json(Json::parse(
          R"({"kind":"clique","payload":{"num_vertices":2,"edges":[[1,2]],"k":3}})")),
      InvalidInstance);
}

TEST_CASE("program and spec round trips") {
  GeneratorSpec g;
  g.kind = ProblemKind::kIp01;
  g.seed = 3;
  g.size = 6;
  const BinaryProgram p = std::get<ZeroOneIp>(generate(g)).program;
  CHECK(program_from_json(to_json(p)) == p);
  const BinaryProgram q = to_equality_form(p);
  CHECK(program_from_json(Json::parse(to_json(q).dump())) == q);

  g.param = 4;
  g.density = 0.25;
  CHECK(generator_spec_from_json(to_json(g)) == g);

  const BigInt big = BigInt(1) << 90;
  CHECK(bigint_to_json(big).is_string());
  CHECK(bigint_from_json(bigint_to_json(big)) == big);
  CHECK(bigint_from_json(bigint_to_json(BigInt(-5))) == -5);
}

TEST_CASE("dimacs and edge lists") {
  std::istringstream cnf("c demo\np cnf 3 2\n1 -2 0\n2 3 -1 0\n");
  const auto sat = std::get<Sat>(parse_dimacs(cnf));
  CHECK(sat.formula.num_vars == 3);
  CHECK(sat.formula.clauses == std::vector<std::vector<Literal>>{{1, -2}, {2, 3, -1}});
  std::istringstream broken("p cnf 2 1\n1 3 0\n");
  CHECK_THROWS(parse_dimacs(broken));

  std::istringstream edges("# square\n1 2\n2 3\n3 4\n4 1\n");
  const auto h = std::get<UndirectedHcp>(parse_edge_list(edges, ProblemKind::kHcp, {}, {}));
  CHECK(h.graph.num_vertices == 4);
  CHECK(h.graph.num_edges() == 4);

  std::istringstream weighted("1 2 5\n2 3 1\n");
  const auto mc = std::get<MaxCut>(parse_edge_list(weighted, ProblemKind::kMaxCut, 3, 4));
  CHECK(mc.graph.num_vertices == 4);
  CHECK(mc.W == 3);
  CHECK(mc.graph.weights == bigs({5, 1}));

  std::istringstream need_k("1 2\n");
  CHECK_THROWS_AS(parse_edge_list(need_k, ProblemKind::kClique, {}, {}), ParseError);
}

TEST_CASE("chain manifests") {
  const std::vector<std::string> ids{"part_to_ks", "ks_to_ip"};
  CHECK(chain_from_manifest(chain_manifest(ids)) == ids);
}
