#include "grseries/lattices.hpp"

#include <stdexcept>

#include "grseries/numtheory.hpp"

namespace grseries {

std::vector<SublatticeHNF> enumerate_sublattices(std::int64_t m) {
    if (m <= 0) throw std::domain_error("enumerate_sublattices: index must be positive");
    std::vector<SublatticeHNF> out;
    for (std::int64_t a : divisors(m))
        for (std::int64_t p = 0; p < a; ++p) out.push_back({a, m / a, p});
    return out;
}

std::array<bool, 3> containments(const SublatticeHNF& lat) {
    const bool a_even = lat.a % 2 == 0;
    return {
        lat.b % 2 == 0,                    // L1: second coordinate even
        a_even && lat.p % 2 == 0,          // L2: first coordinate even
        a_even && (lat.b - lat.p) % 2 == 0 // L3: coordinates of equal parity
    };
}

TorusData::TorusData(HomologyClass c, int d0, std::array<int, 3> signs)
    : cls(std::move(c)), sgn_d0(d0), signs_d(signs) {
    if (d0 != 1 && d0 != -1) throw std::domain_error("torus: sgn D0 must be +-1");
    for (int s : signs_d)
        if (s != 1 && s != -1) throw std::domain_error("torus: twisted signs must be +-1");
}

TorusData TorusData::of_type(HomologyClass c, int d0, int type) {
    if (type < 0 || type > 3) throw std::domain_error("torus: type must be in 0..3");
    std::array<int, 3> signs{1, 1, 1};
    for (int i = 0; i < type; ++i) signs[i] = -1;
    return TorusData(std::move(c), d0, signs);
}

int TorusData::type() const {
    int k = 0;
    for (int s : signs_d)
        if (s < 0) ++k;
    return k;
}

LatticeCensus census(std::int64_t m) {
    LatticeCensus r;
    r.m = m;
    std::array<std::int64_t, 3> singles{0, 0, 0};
    for (const SublatticeHNF& lat : enumerate_sublattices(m)) {
        const auto in = containments(lat);
        const int n = static_cast<int>(in[0]) + static_cast<int>(in[1]) + static_cast<int>(in[2]);
        switch (n) {
            case 0: ++r.count_none; break;
            case 1: ++singles[in[0] ? 0 : (in[1] ? 1 : 2)]; break;
            case 3: ++r.count_all; break;
            default:
                // containment in two of the L_i forces the third
                throw std::logic_error("census: lattice contained in exactly two L_i");
        }
    }
    if (singles[0] != singles[1] || singles[0] != singles[2])
        throw std::logic_error("census: |L^1|, |L^2|, |L^3| differ");
    r.count_single = singles[0];

    const Int total = r.count_none + 3 * r.count_single + r.count_all;
    if (total != sigma(Rat(m)) || Int(r.count_single + r.count_all) != sigma(Rat(m, 2)) ||
        Int(r.count_all) != sigma(Rat(m, 4)))
        throw std::logic_error("census: divisor-sum closed forms violated");
    return r;
}

int sgn_lambda(const SublatticeHNF& lat, const TorusData& torus) {
    int s = torus.sgn_d0;
    const auto in = containments(lat);
    for (int i = 0; i < 3; ++i)
        if (in[i]) s *= torus.signs_d[i];
    return s;
}

std::int64_t signed_sum(std::int64_t m, const TorusData& torus) {
    std::int64_t brute = 0;
    for (const SublatticeHNF& lat : enumerate_sublattices(m)) brute += sgn_lambda(lat, torus);

    const LatticeCensus c = census(m);
    const std::int64_t closed =
        torus.sgn_d0 *
        (c.count_none + c.count_single * torus.sum_signs() + c.count_all * torus.prod_signs());
    if (brute != closed)
        throw std::logic_error("signed_sum: brute force disagrees with the census closed form");
    return brute;
}

std::pair<int, int> twist_sign_params(const TorusData& torus) {
    const int sum = torus.sum_signs();
    const int prod = torus.prod_signs();
    return {sum - 3, prod - sum + 2};
}

USeries phi_lattice(const TorusData& torus, const USeries& F, int torder) {
    if (F.c[0] != 1) throw std::domain_error("phi_lattice: F(0) must be 1");
    USeries F_at(torder);
    for (int n = 0; n <= std::min(torder, F.order); ++n) F_at.c[n] = F.c[n];
    const USeries logF = log(F_at);
    USeries acc(torder);
    for (int m = 1; m <= torder; ++m)
        acc = add(acc, scale(subst_scale(logF, m), Rat(Int(signed_sum(m, torus)), Int(m))));
    return exp(acc);
}

USeries phi_closed(const TorusData& torus, const USeries& f, int torder) {
    if (f.c[0] != 1) throw std::domain_error("phi_closed: f(0) must be 1");
    USeries f_at(torder);
    for (int n = 0; n <= std::min(torder, f.order); ++n) f_at.c[n] = f.c[n];
    const auto [s1, s2] = twist_sign_params(torus);
    USeries r = f_at;
    r = mul(r, pow(subst_scale(f_at, 2), Rat(s1, 2)));
    r = mul(r, pow(subst_scale(f_at, 4), Rat(s2, 4)));
    if (torus.sgn_d0 < 0) r = pow(r, -1);
    return r;
}

}  // namespace grseries
