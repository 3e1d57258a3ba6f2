#include <doctest.h>

#include "linorbit/errors.hpp"
#include "linorbit/ip_solver.hpp"
#include "linorbit/kernels.hpp"
#include "linorbit/genlab.hpp"
#include "linorbit/rng.hpp"
#include "support.hpp"

using namespace linorbit;

namespace {

BinaryProgram sum_program(std::size_t n, Relation rel, int rhs, std::optional<BigInt> bound) {
  BinaryProgram p;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    p.add_variable({"x", {static_cast<std::int64_t>(i + 1)}});
    terms.push_back({i, 1});
  }
  p.add_row(terms, rel, rhs, bound);
  return p;
}

std::vector<BigInt> coefs(const ConstraintRow& row) {
  std::vector<BigInt> out;
  for (const Term& t : row.terms) out.push_back(t.coef);
  return out;
}

}  // namespace

TEST_CASE("slack variables for a <= row") {
  const BinaryProgram q = to_equality_form(sum_program(6, Relation::kLe, 5, BigInt(5)));
  REQUIRE(q.num_rows() == 1);
  CHECK(q.rows()[0].rel == Relation::kEq);
  CHECK(q.num_variables() == 9);
  CHECK(coefs(q.rows()[0]) == support::bigs({1, 1, 1, 1, 1, 1, 1, 2, 4}));
  CHECK(q.variables()[6].str() == "s[1,1]");
  CHECK(q.variables()[8].str() == "s[1,3]");
  // 1 + 2 + 3 slack bits beyond the original row.
  CHECK(ip_size(q, SizeMode::kBits) - ip_size(sum_program(6, Relation::kLe, 5, BigInt(5)),
                                                SizeMode::kBits) == 6);
}

TEST_CASE("single slack") {
  const BinaryProgram q = to_equality_form(sum_program(1, Relation::kLe, 1, BigInt(1)));
  CHECK(coefs(q.rows()[0]) == support::bigs({1, 1}));
  CHECK(q.rows()[0].rhs == 1);
}

TEST_CASE("surplus row equivalence by enumeration") {
  const BinaryProgram p = sum_program(2, Relation::kGe, 1, BigInt(1));
  const BinaryProgram q = to_equality_form(p);
  CHECK(coefs(q.rows()[0]) == support::bigs({1, 1, -1}));
  for (unsigned m = 0; m < 4; ++m) {
    const std::vector<std::uint8_t> x{static_cast<std::uint8_t>(m & 1u),
                                      static_cast<std::uint8_t>((m >> 1) & 1u)};
    bool extends = false;
    for (std::uint8_t s = 0; s < 2; ++s) {
      extends = extends || satisfies(q, std::vector<std::uint8_t>{x[0], x[1], s});
    }
    CHECK(extends == (x[0] + x[1] >= 1));
  }
}

TEST_CASE("zero bound needs no slack") {
  const BinaryProgram q = to_equality_form(sum_program(2, Relation::kLe, 0, BigInt(0)));
  CHECK(q.num_variables() == 2);
}

TEST_CASE("slack bound contract") {
  CHECK_THROWS_AS(to_equality_form(sum_program(2, Relation::kLe, 1, std::nullopt)),
                  ContractViolation);
  CHECK_THROWS_AS(to_equality_form(sum_program(2, Relation::kLe, 1, BigInt(-1))), InvalidInstance);
}

TEST_CASE("row normalisation") {
  BinaryProgram p;
  p.add_variable({"x", {1}});
  p.add_variable({"x", {2}});
  p.add_row({{1, 2}, {0, 3}, {1, -2}}, Relation::kEq, 3);
  REQUIRE(p.rows()[0].terms.size() == 1);
  CHECK(p.rows()[0].terms[0].var == 0);
  CHECK(p.nonzeros() == 1);
  CHECK_THROWS_AS(p.add_row({{2, 1}}, Relation::kEq, 0), InvalidInstance);
}

TEST_CASE("variable tags") {
  const VariableTag t = parse_variable_tag("x[1,-2]");
  CHECK(t.family == "x");
  CHECK(t.index == std::vector<std::int64_t>{1, -2});
  CHECK(parse_variable_tag("y").str() == "y");
  CHECK_THROWS_AS(parse_variable_tag("x[1,"), ParseError);
}

TEST_CASE("ip size") {
  CHECK(ip_size(BinaryProgram{}, SizeMode::kElement) == 0);
  CHECK(ip_size(sum_program(3, Relation::kEq, 2, std::nullopt), SizeMode::kElement) == 4);
}

TEST_CASE("solver examples") {
  const IpResult one = solve_ip(sum_program(2, Relation::kEq, 1, std::nullopt));
  REQUIRE(one.feasible);
  CHECK(one.assignment == std::vector<std::uint8_t>{0, 1});

  BinaryProgram two;
  two.add_variable({"x", {1}});
  two.add_row({{0, 1}}, Relation::kEq, 2);
  CHECK_FALSE(solve_ip(two).feasible);
  CHECK(solve_ip(two).explored == 2);

  CHECK_THROWS_AS(solve_ip(sum_program(30, Relation::kEq, 1, std::nullopt)), BudgetExceeded);
  CHECK_THROWS_AS(solve_ip(sum_program(2, Relation::kEq, 1, std::nullopt), 41), ContractViolation);
}

TEST_CASE("reference and parallel scans agree with brute force") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const CounterRng rng(s);
    GeneratorSpec g;
    g.kind = ProblemKind::kIp01;
    g.seed = rng.draw({0});
    g.size = rng.between(1, 18, {1});
    g.secondary = rng.between(1, 4, {2});
    g.max_weight = rng.between(1, 12, {3});
    BinaryProgram p = std::get<ZeroOneIp>(generate(g)).program;
    // Tighten an equality so roughly half the programs are infeasible.
    if (rng.chance(0.5, {4}) && p.num_rows() > 0) {
      ConstraintRow r = p.rows()[0];
      r.rhs += 1;
      r.rel = Relation::kEq;
      r.slack_bound.reset();
      p.add_row(r);
    }
    const IpResult ref = solve_ip(p, 24, ScanStrategy::kReference);
    const IpResult par = solve_ip(p, 24, ScanStrategy::kParallel);
    CHECK(ref.feasible == par.feasible);
    CHECK(ref.assignment == par.assignment);
    CHECK(ref.explored == par.explored);
    if (p.num_variables() <= 14) CHECK(ref.feasible == support::program_feasible(p));
    if (ref.feasible) CHECK(satisfies(p, ref.assignment));

    const auto dense = kernels::DenseProgram::compile(p);
    REQUIRE(dense);
    CHECK(kernels::first_feasible_reference(*dense) == kernels::first_feasible_parallel(*dense));
  }
}

TEST_CASE("rank helpers") {
  CHECK(kernels::rank_to_vector(5, 4) == std::vector<std::uint8_t>{0, 1, 0, 1});
  CHECK(kernels::rank_to_indices(5, 4) == std::vector<std::size_t>{1, 3});
  auto pred = [](std::uint64_t r) { return r % 7919 == 7918; };
  CHECK(kernels::first_rank_serial(16, pred) == kernels::first_rank_parallel(16, pred));
}

TEST_CASE("huge coefficients fall back to exact arithmetic") {
  BinaryProgram p;
  p.add_variable({"x", {1}});
  p.add_variable({"x", {2}});
  const BigInt big = BigInt(1) << 80;
  p.add_row({{0, big}, {1, big}}, Relation::kEq, big);
  CHECK_FALSE(kernels::DenseProgram::compile(p));
  const IpResult r = solve_ip(p);
  REQUIRE(r.feasible);
  CHECK(r.assignment == std::vector<std::uint8_t>{0, 1});
}
