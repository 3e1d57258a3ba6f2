#include <benchmark/benchmark.h>

#include "linorbit/genlab.hpp"
#include "linorbit/ip_solver.hpp"
#include "linorbit/kernels.hpp"
#include "linorbit/oracles.hpp"

namespace {

using namespace linorbit;

// Infeasible programs force a full scan: rows x_1 + ... + x_n = n + 1.
BinaryProgram infeasible_program(std::size_t n) {
  GeneratorSpec spec;
  spec.kind = ProblemKind::kIp01;
  spec.seed = 42;
  spec.size = n;
  spec.secondary = n / 2;
  BinaryProgram p = std::get<ZeroOneIp>(generate(spec)).program;
  std::vector<Term> all;
  for (std::size_t j = 0; j < n; ++j) all.push_back({j, 1});
  p.add_row(std::move(all), Relation::kEq, static_cast<long>(n + 1));
  return p;
}

void BM_SolveIp(benchmark::State& state, ScanStrategy strategy) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinaryProgram p = infeasible_program(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_ip(p, 40, strategy));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void BM_PartitionScan(benchmark::State& state, ScanStrategy strategy) {
  GeneratorSpec spec;
  spec.kind = ProblemKind::kPartition;
  spec.seed = 7;
  spec.size = static_cast<std::size_t>(state.range(0));
  spec.max_weight = 1000;
  Problem p = generate(spec);
  // An odd total has no partition, so every subset is examined.
  auto& values = std::get<Partition>(p).values;
  BigInt total = 0;
  for (const auto& v : values) total += v;
  if (total % 2 == 0) values.back() += 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(p, kDefaultBudget, strategy));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

}  // namespace

BENCHMARK_CAPTURE(BM_SolveIp, reference, ScanStrategy::kReference)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK_CAPTURE(BM_SolveIp, parallel, ScanStrategy::kParallel)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK_CAPTURE(BM_PartitionScan, reference, ScanStrategy::kReference)->Arg(12)->Arg(16);
BENCHMARK_CAPTURE(BM_PartitionScan, parallel, ScanStrategy::kParallel)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
