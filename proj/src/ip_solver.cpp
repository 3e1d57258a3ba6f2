#include "linorbit/ip_solver.hpp"

#include <string>

#include "linorbit/errors.hpp"
#include "linorbit/kernels.hpp"

namespace linorbit {

IpResult solve_ip(const BinaryProgram& program, std::size_t var_cap, ScanStrategy strategy) {
  if (var_cap > 40) throw ContractViolation("var_cap may not exceed 40");
  const std::size_t n = program.num_variables();
  if (n > var_cap) {
    throw BudgetExceeded("program has " + std::to_string(n) + " variables, cap is " +
                         std::to_string(var_cap));
  }
  std::optional<std::uint64_t> rank;
  if (auto dense = kernels::DenseProgram::compile(program)) {
    rank = strategy == ScanStrategy::kParallel ? kernels::first_feasible_parallel(*dense)
                                               : kernels::first_feasible_reference(*dense);
  } else {
    auto pred = [&](std::uint64_t r) { return satisfies(program, kernels::rank_to_vector(r, n)); };
    rank = strategy == ScanStrategy::kParallel ? kernels::first_rank_parallel(n, pred)
                                               : kernels::first_rank_serial(n, pred);
  }
  IpResult result;
  if (rank) {
    result.feasible = true;
    result.assignment = kernels::rank_to_vector(*rank, n);
    result.explored = *rank + 1;
  } else {
    result.explored = std::uint64_t{1} << n;
  }
  return result;
}

}  // namespace linorbit
