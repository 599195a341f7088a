#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace grseries {

// All coefficient arithmetic in the project is exact: arbitrary-precision
// integers and rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// "p" for integers, "p/q" otherwise; always in lowest terms (cpp_rational
// keeps values normalized).
std::string rat_to_string(const Rat& x);

}  // namespace grseries
