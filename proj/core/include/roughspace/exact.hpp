#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace roughspace {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative counter for models / partitions.
using BigCount = BigInt;

// Exact rational, always reduced, denominator > 0. Admissibility decisions
// never touch floating point.
using ExactRatio = boost::multiprecision::cpp_rational;

inline BigInt ratio_num(const ExactRatio& r) { return boost::multiprecision::numerator(r); }
inline BigInt ratio_den(const ExactRatio& r) { return boost::multiprecision::denominator(r); }

// floor(sqrt(n)), n >= 0
BigInt isqrt_floor(const BigInt& n);

bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

// floor(sqrt(num/den)), num >= 0, den > 0
BigInt isqrt_ratio_floor(const BigInt& num, const BigInt& den);

// exact C(n, k); 0 when k < 0 or k > n
BigCount binomial(const BigInt& n, const BigInt& k);

// Parses "p/q" or "p" (optional leading '-'); rejects q == 0 and malformed text.
ExactRatio parse_ratio(const std::string& text);

// "p/q", or just "p" when the reduced denominator is 1
std::string format_ratio(const ExactRatio& r);

}  // namespace roughspace
