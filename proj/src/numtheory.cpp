#include "grseries/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace grseries {

std::vector<std::int64_t> divisors(std::int64_t m) {
    if (m <= 0) throw std::domain_error("divisors: argument must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        if (d != m / d) large.push_back(m / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(std::int64_t m) {
    if (m <= 0) throw std::domain_error("mobius: argument must be positive");
    int k = 0;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;  // square factor
        ++k;
    }
    if (m > 1) ++k;
    return k % 2 == 0 ? 1 : -1;
}

Int sigma(const Rat& x) {
    if (!is_integer(x) || numerator(x) <= 0) return 0;
    // Inputs stay small (truncation orders), so int64 is plenty here.
    const std::int64_t m = static_cast<std::int64_t>(numerator(x));
    Int s = 0;
    for (std::int64_t d : divisors(m)) s += d;
    return s;
}

std::int64_t mobius_divisor_sum(std::int64_t l) {
    std::int64_t s = 0;
    for (std::int64_t d : divisors(l)) s += mobius(d);
    return s;
}

}  // namespace grseries
