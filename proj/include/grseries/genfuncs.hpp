#pragma once

#include <array>

#include "grseries/useries.hpp"

namespace grseries {

enum class GenFuncFlavor { TaubesF, RuanTianF };

/// The three generating functions a series is built from: e for exceptional
/// spheres, g for generic classes, and either f (Taubes flavor, fed through
/// the wall-crossing family) or F (Ruan-Tian flavor) for tori.
struct GenFuncChoice {
    USeries e;
    USeries g;
    USeries f_or_F;
    GenFuncFlavor flavor = GenFuncFlavor::TaubesF;
};

USeries one_plus_t(int torder);
/// 1/(1-t): the all-ones coefficient vector.
USeries geometric(int torder);
USeries exp_t(int torder);

/// e = 1+t, f = 1/(1-t), g = e^t.
GenFuncChoice taubes_defaults(int torder);
/// e = 1+t, F = mobius_F, g = e^t.
GenFuncChoice ruan_tian_defaults(int torder);

/// F(t) = exp(sum_m mu(m) t^m).
USeries mobius_F(int torder);

/// f0 = f, f1 = f(t)/f(t^2), f2 = f(t)f(t^4)/f(t^2)^2,
/// f3 = f(t)f(t^4)/f(t^2)^3; f must have constant term 1.
std::array<USeries, 4> wall_crossing_family(const USeries& f);

/// f(t) = prod_{m>=1} F(t^m)^{sigma(m)/m}, evaluated in log domain with
/// exact rational exponents.
USeries f_from_F(const USeries& F, int torder);

struct ProdFCheck {
    bool ok = false;
    int first_fail_degree = -1;
};

/// Checks prod_{k<=torder} F(t^k) == e^t modulo t^{torder+1}.
ProdFCheck check_prodF(const USeries& F, int torder);

}  // namespace grseries
