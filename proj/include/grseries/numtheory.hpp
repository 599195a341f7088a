#pragma once

#include <cstdint>
#include <vector>

#include "grseries/rational.hpp"

namespace grseries {

/// Divisors of m in ascending order. m >= 1.
std::vector<std::int64_t> divisors(std::int64_t m);

/// Moebius function: mu(1)=1, mu(m)=(-1)^k for squarefree m with k prime
/// factors, 0 otherwise. m >= 1.
int mobius(std::int64_t m);

/// Divisor sum sigma(m) = sum of divisors when x is a positive integer,
/// and 0 otherwise (so sigma(m/2), sigma(m/4) need no case analysis).
Int sigma(const Rat& x);

/// Sum of mu(m) over the divisors m of l; equals 1 iff l == 1.
std::int64_t mobius_divisor_sum(std::int64_t l);

}  // namespace grseries
