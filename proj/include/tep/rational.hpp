// Exact rational arithmetic for probability bookkeeping.
//
// All masses, densities and amounts in the library are cpp_rational values;
// floating point shows up only in decimal rendering and Monte Carlo code.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tep {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// 2^k for any integer k (negative exponents give 1/2^|k|).
Rat pow2(long k);

// floor(log2(x)) for x > 0, by exact power-of-2 bracketing.
long floor_log2(const Rat& x);

// Accepts "p/q", plain integers, and decimal strings like "-0.125" or "3.5e2".
// Throws std::invalid_argument on anything else.
Rat parse_rational(const std::string& s);

// Canonical lowest-terms rendering: "p/q", or just "p" when q == 1.
// parse_rational(to_fraction_string(x)) == x.
std::string to_fraction_string(const Rat& x);

// Round-to-nearest decimal with the given number of significant digits.
std::string to_decimal_string(const Rat& x, int sig_digits = 15);

double to_double(const Rat& x);

}  // namespace tep
