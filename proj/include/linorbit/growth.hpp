#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linorbit/genlab.hpp"
#include "linorbit/reductions.hpp"

namespace linorbit {

struct SizePair {
  std::size_t scale = 0;
  std::uint64_t seed = 0;
  std::uint64_t in_elements = 0;
  std::uint64_t out_elements = 0;
  std::uint64_t in_bits = 0;
  std::uint64_t out_bits = 0;
};

struct FormulaTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
};

struct GrowthReport {
  std::string reduction;
  AffineBound claim;
  bool linear_claim = true;
  std::vector<SizePair> pairs;  // sorted by (in_elements, scale, seed)
  double max_ratio = 0.0;       // max out/in, element mode
  double max_bits_ratio = 0.0;
  double fitted_slope = 0.0;    // least squares through the origin, element mode
  std::vector<std::string> violations;
  std::vector<FormulaTally> formulas;
  bool bound_holds = true;      // every pair satisfies the claim
  bool formulas_hold = true;

  bool pass() const { return bound_holds && formulas_hold; }
};

// Draws `samples` instances at each scale point from `family` (its `size`
// replaced by the scale point, its seed split per point and sample), applies
// the reduction and records element and bits sizes. A 0-1 IP target is
// measured in equality form; count formulas are checked on the raw output.
// Throws ContractViolation when the family's kind is not the reduction's
// source kind.
GrowthReport audit(std::string_view reduction_id, const GeneratorSpec& family,
                   std::span<const std::size_t> scales, std::size_t samples = 3);

// Family used by the audit when none is given: connected / covering
// instances with the reduction's source kind.
GeneratorSpec default_family(std::string_view reduction_id, std::uint64_t seed);

std::string to_table(const GrowthReport& report);

}  // namespace linorbit
