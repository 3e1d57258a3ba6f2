#include "linorbit/bigint.hpp"

#include <limits>

namespace linorbit {

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 1;
  return static_cast<std::size_t>(boost::multiprecision::msb(abs(v))) + 1;
}

std::size_t slack_width(const BigInt& g) {
  if (g <= 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(g)) + 1;
}

bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace linorbit
