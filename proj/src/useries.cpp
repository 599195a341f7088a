#include "grseries/useries.hpp"

#include <stdexcept>

namespace grseries {

USeries::USeries(int ord) : order(ord), c(static_cast<std::size_t>(ord) + 1) {
    if (ord < 0) throw std::domain_error("useries: order must be nonnegative");
}

USeries USeries::unit(int ord) {
    USeries r(ord);
    r.c[0] = 1;
    return r;
}

USeries USeries::t(int ord) {
    USeries r(ord);
    if (ord >= 1) r.c[1] = 1;
    return r;
}

const Rat& USeries::coeff(int n) const {
    if (n < 0 || n > order) throw std::domain_error("useries: coefficient index out of range");
    return c[static_cast<std::size_t>(n)];
}

void USeries::set(int n, Rat v) {
    if (n < 0 || n > order) throw std::domain_error("useries: coefficient index out of range");
    c[static_cast<std::size_t>(n)] = std::move(v);
}

bool USeries::is_unit() const {
    if (c[0] != 1) return false;
    for (int n = 1; n <= order; ++n)
        if (c[n] != 0) return false;
    return true;
}

namespace {

void require_same_order(const USeries& x, const USeries& y) {
    if (x.order != y.order) throw std::domain_error("useries: truncation order mismatch");
}

}  // namespace

USeries add(const USeries& x, const USeries& y) {
    require_same_order(x, y);
    USeries r(x.order);
    for (int n = 0; n <= x.order; ++n) r.c[n] = x.c[n] + y.c[n];
    return r;
}

USeries sub(const USeries& x, const USeries& y) {
    require_same_order(x, y);
    USeries r(x.order);
    for (int n = 0; n <= x.order; ++n) r.c[n] = x.c[n] - y.c[n];
    return r;
}

USeries negate(const USeries& x) {
    USeries r(x.order);
    for (int n = 0; n <= x.order; ++n) r.c[n] = -x.c[n];
    return r;
}

USeries scale(const USeries& x, const Rat& s) {
    USeries r(x.order);
    for (int n = 0; n <= x.order; ++n) r.c[n] = x.c[n] * s;
    return r;
}

USeries mul(const USeries& x, const USeries& y) {
    require_same_order(x, y);
    USeries r(x.order);
    for (int i = 0; i <= x.order; ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; i + j <= x.order; ++j) {
            if (y.c[j] == 0) continue;
            r.c[i + j] += x.c[i] * y.c[j];
        }
    }
    return r;
}

USeries exp(const USeries& x) {
    if (x.c[0] != 0) throw std::domain_error("useries exp: nonzero constant term");
    // Horner: 1 + x(1 + x/2 (1 + x/3 (...))).
    USeries r = USeries::unit(x.order);
    for (int n = x.order; n >= 1; --n) r = add(USeries::unit(x.order), scale(mul(x, r), Rat(1, n)));
    return r;
}

USeries log(const USeries& x) {
    if (x.c[0] != 1) throw std::domain_error("useries log: constant term must be 1");
    USeries u = sub(x, USeries::unit(x.order));
    USeries r(x.order);
    USeries p = USeries::unit(x.order);
    for (int n = 1; n <= x.order; ++n) {
        p = mul(p, u);
        r = add(r, scale(p, Rat(n % 2 == 1 ? 1 : -1, n)));
    }
    return r;
}

USeries pow(const USeries& x, const Rat& e) {
    if (is_integer(e) && numerator(e) >= 0) {
        Int k = numerator(e);
        USeries base = x;
        USeries r = USeries::unit(x.order);
        while (k > 0) {
            if ((k & 1) != 0) r = mul(r, base);
            k >>= 1;
            if (k > 0) base = mul(base, base);
        }
        return r;
    }
    if (x.c[0] != 1)
        throw std::domain_error("useries pow: fractional or negative exponent needs constant term 1");
    return exp(scale(log(x), e));
}

USeries subst_scale(const USeries& x, int q) {
    if (q < 1) throw std::domain_error("subst_scale: q must be >= 1");
    USeries r(x.order);
    for (int n = 0; n * q <= x.order; ++n) r.c[n * q] = x.c[n];
    return r;
}

USeries truncated(const USeries& x, int order) {
    USeries r(order);
    for (int n = 0; n <= std::min(order, x.order); ++n) r.c[n] = x.c[n];
    return r;
}

std::string to_string(const USeries& x) {
    std::string s;
    for (int n = 0; n <= x.order; ++n) {
        if (x.c[n] == 0) continue;
        if (!s.empty()) s += " + ";
        s += rat_to_string(x.c[n]);
        if (n >= 1) s += "*t";
        if (n >= 2) s += "^" + std::to_string(n);
    }
    return s.empty() ? "0" : s;
}

}  // namespace grseries
