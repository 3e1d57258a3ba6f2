#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "linorbit/instances.hpp"

namespace linorbit {

struct GeneratorSpec {
  ProblemKind kind = ProblemKind::kSat;
  std::uint64_t seed = 0;
  // Primary scale: vertices, variables, sets, items or triples.
  std::size_t size = 6;
  // Clauses, universe size, |T|, terminals or IP rows; 0 picks a default
  // derived from `size`.
  std::size_t secondary = 0;
  // Edge, arc, set-membership or coefficient probability.
  double density = 0.5;
  std::size_t max_clause = 3;
  // Largest weight, item value or IP coefficient magnitude.
  std::uint64_t max_weight = 9;
  // Graphs start from a random spanning tree, digraphs give every vertex an
  // out-arc, set families have no empty set and no uncovered element.
  bool connected = true;
  // Overrides the random k / l / W / target.
  std::optional<std::uint64_t> param;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Deterministic in `spec`; the result always passes validate(). Throws
// ContractViolation for inconsistent parameters and UnsupportedKind for
// Job Sequencing.
Problem generate(const GeneratorSpec& spec);

}  // namespace linorbit
