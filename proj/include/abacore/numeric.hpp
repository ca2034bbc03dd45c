#pragma once

// Exact arithmetic plumbing: unbounded integers for factorials/degrees and
// exact rationals for generalized hook lengths. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace abacore {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// n/d with d == 1 printed as plain "n", otherwise "n/d".
std::string rational_to_string(const Rational& r);

// accepts "p", "-p", "p/q" with q > 0; throws std::invalid_argument otherwise
Rational parse_rational(const std::string& text);

}  // namespace abacore
