#pragma once

// Test-only oracles. Everything here is computed by a route independent of
// the library code it checks: literal scans, polynomial long division,
// integer linear-system membership.

#include <array>
#include <cstdint>
#include <vector>

#include "grseries/rational.hpp"

namespace oracles {

using grseries::Rat;

inline std::vector<std::int64_t> divisors_literal(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

inline bool is_prime_literal(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d < p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int mobius_literal(std::int64_t m) {
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % (d * d) == 0) return 0;
    int k = 0;
    for (std::int64_t p = 2; p <= m; ++p)
        if (is_prime_literal(p) && m % p == 0) ++k;
    return k % 2 == 0 ? 1 : -1;
}

inline std::int64_t sigma_literal(std::int64_t m) {
    std::int64_t s = 0;
    for (std::int64_t d : divisors_literal(m)) s += d;
    return s;
}

/// Coefficients 0..order of num(t)/den(t) by polynomial long division;
/// den[0] must be nonzero.
inline std::vector<Rat> expand_ratio(const std::vector<std::int64_t>& num,
                                     const std::vector<std::int64_t>& den, int order) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Rat acc = n < static_cast<int>(num.size()) ? Rat(num[static_cast<std::size_t>(n)]) : Rat(0);
        for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k)
            acc -= Rat(den[static_cast<std::size_t>(k)]) * c[static_cast<std::size_t>(n - k)];
        c[static_cast<std::size_t>(n)] = acc / Rat(den[0]);
    }
    return c;
}

/// Coefficients 0..order of exp(p(t)) for a polynomial p with p(0) = 0,
/// via the derivative recurrence (exp p)' = p' exp(p).
inline std::vector<Rat> expand_exp(const std::vector<Rat>& p, int order) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n && k < static_cast<int>(p.size()); ++k)
            acc += Rat(k) * p[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n - k)];
        c[static_cast<std::size_t>(n)] = acc / Rat(n);
    }
    return c;
}

/// Is (x, y) an integer combination of u and v? Cramer with an exact
/// divisibility check; u, v must be linearly independent.
inline bool in_span(std::int64_t x, std::int64_t y, std::array<std::int64_t, 2> u,
                    std::array<std::int64_t, 2> v) {
    const std::int64_t det = u[0] * v[1] - u[1] * v[0];
    const std::int64_t s = x * v[1] - y * v[0];
    const std::int64_t t = u[0] * y - u[1] * x;
    return det != 0 && s % det == 0 && t % det == 0;
}

/// Containment of the lattice spanned by (a,0),(p,b) in each of
/// L1 = <(1,0),(0,2)>, L2 = <(2,0),(0,1)>, L3 = <(2,0),(1,1)>, decided by
/// generator membership through the generic integer solver above.
inline std::array<bool, 3> containments_by_membership(std::int64_t a, std::int64_t b,
                                                      std::int64_t p) {
    const std::array<std::array<std::int64_t, 2>, 2> l1{{{1, 0}, {0, 2}}};
    const std::array<std::array<std::int64_t, 2>, 2> l2{{{2, 0}, {0, 1}}};
    const std::array<std::array<std::int64_t, 2>, 2> l3{{{2, 0}, {1, 1}}};
    auto contained = [&](const std::array<std::array<std::int64_t, 2>, 2>& l) {
        return in_span(a, 0, l[0], l[1]) && in_span(p, b, l[0], l[1]);
    };
    return {contained(l1), contained(l2), contained(l3)};
}

}  // namespace oracles
