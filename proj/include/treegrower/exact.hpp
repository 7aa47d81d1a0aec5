#ifndef TREEGROWER_EXACT_HPP
#define TREEGROWER_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace treegrower {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// base^exp with exact integers.
BigInt pow_int(std::uint64_t base, std::uint64_t exp);

/// Natural log of a positive integer; stays finite where double conversion would overflow.
double log_big(const BigInt& value);

/// Natural log of a positive rational.
double log_big(const BigRat& value);

/// Correctly rounded decimal rendering with the given number of significant
/// digits (round half away from zero). Plain notation for moderate magnitudes,
/// scientific otherwise. Trailing zeros after the decimal point are stripped,
/// so exact integers render as integers.
std::string decimal_string(const BigRat& value, unsigned significant_digits = 12);

} // namespace treegrower

#endif
