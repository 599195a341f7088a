#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "grseries/homology.hpp"
#include "grseries/useries.hpp"

namespace grseries {

/// An index-ab sublattice of Z + tau Z in Hermite form: aZ + (b tau + p)Z
/// with 0 <= p < a. These triples are pairwise inequivalent representatives.
struct SublatticeHNF {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t p = 0;

    std::int64_t index() const { return a * b; }
    friend bool operator==(const SublatticeHNF&, const SublatticeHNF&) = default;
};

/// All index-m sublattices; cardinality sigma(m).
std::vector<SublatticeHNF> enumerate_sublattices(std::int64_t m);

/// Which of the three index-2 sublattices contain the given lattice:
/// L1 = Z + 2tau Z, L2 = 2Z + tau Z, L3 = 2Z + (1+tau)Z. Membership is
/// decided on the two Hermite generators (a, 0) and (p, b), which reduces to
/// b even / a,p even / a even and b = p (mod 2).
std::array<bool, 3> containments(const SublatticeHNF& lat);

/// An embedded torus: its class, the sign of the linearization, and the
/// signs of the three twisted operators. The type k = 0..3 is the number of
/// negative twisted signs.
struct TorusData {
    HomologyClass cls;
    int sgn_d0 = 1;
    std::array<int, 3> signs_d{1, 1, 1};

    TorusData() = default;
    TorusData(HomologyClass c, int d0, std::array<int, 3> signs);
    /// Canonical sign assignment: the first `type` twisted signs negative.
    static TorusData of_type(HomologyClass c, int d0, int type);

    int type() const;
    int sum_signs() const { return signs_d[0] + signs_d[1] + signs_d[2]; }
    int prod_signs() const { return signs_d[0] * signs_d[1] * signs_d[2]; }
};

/// Counts of index-m sublattices by containment pattern: in none of the L_i,
/// in exactly one (the three single-containment sets have equal size), in
/// all three. Verifies the divisor-sum closed forms on construction.
struct LatticeCensus {
    std::int64_t m = 1;
    std::int64_t count_none = 0;    // |L^0|
    std::int64_t count_single = 0;  // |L^1| = |L^2| = |L^3|
    std::int64_t count_all = 0;     // |L^123|
};

LatticeCensus census(std::int64_t m);

/// sgn(Lambda) = sgn(D0) * prod of sgn(D_i) over contained L_i.
int sgn_lambda(const SublatticeHNF& lat, const TorusData& torus);

/// Sum of sgn(Lambda) over all index-m sublattices, computed both by brute
/// force and by the census closed form sgn(D0)(A + B sum + C prod); the two
/// must agree.
std::int64_t signed_sum(std::int64_t m, const TorusData& torus);

/// (s1, s2) = (sum sgn D_i - 3, prod sgn D_i - sum sgn D_i + 2).
std::pair<int, int> twist_sign_params(const TorusData& torus);

/// phi_C(t) = prod_m F(t^m)^{signed_sum(m)/m}, in log domain.
USeries phi_lattice(const TorusData& torus, const USeries& F, int torder);

/// phi_C(t) = [f(t) f(t^2)^{s1/2} f(t^4)^{s2/4}]^{sgn D0}; the exponents are
/// integers by construction.
USeries phi_closed(const TorusData& torus, const USeries& f, int torder);

}  // namespace grseries
