#include "grseries/genfuncs.hpp"

#include <stdexcept>

#include "grseries/numtheory.hpp"

namespace grseries {

USeries one_plus_t(int torder) {
    USeries r = USeries::unit(torder);
    if (torder >= 1) r.c[1] = 1;
    return r;
}

USeries geometric(int torder) {
    USeries r(torder);
    for (int n = 0; n <= torder; ++n) r.c[n] = 1;
    return r;
}

USeries exp_t(int torder) { return exp(USeries::t(torder)); }

GenFuncChoice taubes_defaults(int torder) {
    return {one_plus_t(torder), exp_t(torder), geometric(torder), GenFuncFlavor::TaubesF};
}

GenFuncChoice ruan_tian_defaults(int torder) {
    return {one_plus_t(torder), exp_t(torder), mobius_F(torder), GenFuncFlavor::RuanTianF};
}

USeries mobius_F(int torder) {
    USeries x(torder);
    for (int m = 1; m <= torder; ++m) x.c[m] = mobius(m);
    return exp(x);
}

std::array<USeries, 4> wall_crossing_family(const USeries& f) {
    if (f.c[0] != 1) throw std::domain_error("wall_crossing_family: f(0) must be 1");
    const USeries f2 = subst_scale(f, 2);
    const USeries f4 = subst_scale(f, 4);
    const USeries inv_f2 = pow(f2, -1);
    const USeries f1 = mul(f, inv_f2);
    const USeries ff4 = mul(f, f4);
    const USeries g2 = mul(ff4, mul(inv_f2, inv_f2));
    const USeries g3 = mul(g2, inv_f2);
    return {f, f1, g2, g3};
}

USeries f_from_F(const USeries& F, int torder) {
    if (F.c[0] != 1) throw std::domain_error("f_from_F: F(0) must be 1");
    USeries F_at = F;
    if (F.order != torder) {
        F_at = USeries(torder);
        for (int n = 0; n <= std::min(torder, F.order); ++n) F_at.c[n] = F.c[n];
    }
    const USeries logF = log(F_at);
    USeries acc(torder);
    for (int m = 1; m <= torder; ++m)
        acc = add(acc, scale(subst_scale(logF, m), Rat(Int(sigma(Rat(m))), Int(m))));
    return exp(acc);
}

ProdFCheck check_prodF(const USeries& F, int torder) {
    if (F.c[0] != 1) throw std::domain_error("check_prodF: F(0) must be 1");
    USeries F_at = F;
    if (F.order != torder) {
        F_at = USeries(torder);
        for (int n = 0; n <= std::min(torder, F.order); ++n) F_at.c[n] = F.c[n];
    }
    USeries prod = USeries::unit(torder);
    for (int k = 1; k <= torder; ++k) prod = mul(prod, subst_scale(F_at, k));
    const USeries target = exp_t(torder);
    for (int n = 0; n <= torder; ++n)
        if (prod.c[n] != target.c[n]) return {false, n};
    return {true, -1};
}

}  // namespace grseries
