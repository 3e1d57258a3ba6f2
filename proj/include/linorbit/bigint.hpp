#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace linorbit {

// Coefficients, weights and targets can outgrow 64 bits at audit scale.
using BigInt = boost::multiprecision::cpp_int;

// Binary encoding length of |v|: ceil(log2(|v| + 1)), with zero taking one bit.
// Signs are not charged.
std::size_t bit_length(const BigInt& v);

// Number of binary slack variables needed to absorb any gap in [0, g]:
// ceil(log2(g + 1)). Zero for g == 0.
std::size_t slack_width(const BigInt& g);

bool fits_int64(const BigInt& v);

std::string to_string(const BigInt& v);

}  // namespace linorbit
