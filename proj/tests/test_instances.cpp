#include <doctest.h>

#include "linorbit/errors.hpp"
#include "support.hpp"

using namespace linorbit;
using support::bigs;
using support::complete;
using support::ug;

TEST_CASE("element-mode input sizes") {
  CHECK(measure(Sat{{4, {{1, 2, 3}, {-1, -2, 3, 4}}}}).elements == 7);
  CHECK(measure(UndirectedHcp{ug(3, {})}).elements == 0);

  SteinerTree st{ug(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {1, 1, 1, 1}), {0, 4}, 4};
  CHECK(measure(st).elements == 11);

  CHECK(measure(Clique{complete(4), 2}).elements == 7);
  CHECK(measure(ThreeSat{{5, {{1, 2, 4}, {3}}}}).elements == 6);
  CHECK(measure(Knapsack{bigs({2, 3, 5}), 7}).elements == 4);
  CHECK(measure(Partition{bigs({1, 2, 3})}).elements == 3);
  CHECK(measure(MaxCut{ug(2, {{0, 1}}, {3}), 1}).elements == 3);
  CHECK(measure(ThreeDimMatching{{2, {{0, 0, 0}, {1, 1, 1}}}}).elements == 7);
  CHECK(measure(SetPacking{{3, {{0, 1}, {2}}}, 1}).elements == 4);
  CHECK(measure(ExactCover{{3, {{0, 1}, {2}}}}).elements == 3);
  CHECK_THROWS_AS(measure(JobSequencing{}), UnsupportedKind);
}

TEST_CASE("bits mode charges binary lengths") {
  // values 1 (1 bit), 2 (2 bits), 3 (2 bits)
  CHECK(measure(Partition{bigs({1, 2, 3})}).bits == 5);
  CHECK(measure(Knapsack{bigs({4}), 0}).bits == 4);
}

TEST_CASE("certificate checks") {
  CHECK(verify_certificate(Clique{complete(3), 3}, {ProblemKind::kClique, IndexSet{{0, 1, 2}}}));
  CHECK(verify_certificate(Partition{bigs({1, 2, 3})}, {ProblemKind::kPartition, IndexSet{{2}}}));
  CHECK_FALSE(verify_certificate(ThreeSat{{3, {{1, 2, 3}}}},
                                 {ProblemKind::kThreeSat, TruthAssignment{{false, false, false}}}));
  CHECK_FALSE(verify_certificate(Clique{ug(3, {{0, 1}, {1, 2}}), 3},
                                 {ProblemKind::kClique, IndexSet{{0, 1, 2}}}));

  CHECK_THROWS_AS(
      verify_certificate(Clique{complete(3), 1}, {ProblemKind::kPartition, IndexSet{{0}}}),
      KindMismatch);
  CHECK_THROWS_AS(
      verify_certificate(Clique{complete(3), 1}, {ProblemKind::kClique, IndexSet{{3}}}),
      InvalidCertificate);
  CHECK_THROWS_AS(
      verify_certificate(Clique{complete(3), 2}, {ProblemKind::kClique, IndexSet{{1, 1}}}),
      InvalidCertificate);
}

TEST_CASE("cycle certificates") {
  const UndirectedHcp k4{complete(4)};
  CHECK(verify_certificate(k4, {ProblemKind::kHcp, CycleOrder{{0, 2, 1, 3}}}));
  const UndirectedHcp square{ug(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})};
  CHECK_FALSE(verify_certificate(square, {ProblemKind::kHcp, CycleOrder{{0, 2, 1, 3}}}));
  const DirectedHcp two{support::dg(2, {{0, 1}, {1, 0}})};
  CHECK(verify_certificate(two, {ProblemKind::kDhcp, CycleOrder{{0, 1}}}));
}

TEST_CASE("steiner certificates") {
  const SteinerTree st{ug(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, 5}), {0, 2}, 2};
  CHECK(verify_certificate(st, {ProblemKind::kSteinerTree, RootedTree{0, {0, 1}}}));
  CHECK_FALSE(verify_certificate(st, {ProblemKind::kSteinerTree, RootedTree{0, {2}}}));
  CHECK_FALSE(verify_certificate(st, {ProblemKind::kSteinerTree, RootedTree{0, {0}}}));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(Clique{complete(3), 4}), InvalidInstance);
  CHECK_THROWS_AS(validate(Clique{ug(2, {{0, 0}}), 1}), InvalidInstance);
  CHECK_THROWS_AS(validate(Clique{ug(2, {{0, 1}, {1, 0}}), 1}), InvalidInstance);
  CHECK_THROWS_AS(validate(ThreeSat{{4, {{1, 2, 3, 4}}}}), InvalidInstance);
  CHECK_THROWS_AS(validate(Sat{{2, {{3}}}}), InvalidInstance);
  CHECK_THROWS_AS(validate(FeedbackArcSet{support::dg(2, {{0, 0}}), 0}), InvalidInstance);
  CHECK_THROWS_AS(validate(MaxCut{ug(2, {{0, 1}}), 1}), InvalidInstance);
  CHECK_THROWS_AS(validate(SteinerTree{ug(2, {{0, 1}}, {1}), {}, 1}), InvalidInstance);
  CHECK_NOTHROW(validate(Knapsack{bigs({2, 3, 5}), 0}));
}

TEST_CASE("witness shapes") {
  CHECK(witness_type(ProblemKind::kSat) == WitnessType::kTruthAssignment);
  CHECK(witness_type(ProblemKind::kIp01) == WitnessType::kBinaryVector);
  CHECK(witness_type(ProblemKind::kHcp) == WitnessType::kCycleOrder);
  CHECK(witness_type(ProblemKind::kSteinerTree) == WitnessType::kRootedTree);
  CHECK(witness_type(ProblemKind::kChromaticNumber) == WitnessType::kColoring);
  CHECK(witness_type(ProblemKind::kCliqueCover) == WitnessType::kCliquePartition);
  CHECK_THROWS_AS(witness_type(ProblemKind::kJobSequencing), UnsupportedKind);
}
