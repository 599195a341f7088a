#pragma once

#include <string>
#include <vector>

#include "grseries/rational.hpp"

namespace grseries {

/// Truncated univariate formal power series with exact rational coefficients.
/// Coefficients are indexed 0..order; all operations truncate at `order`.
struct USeries {
    int order = 0;
    std::vector<Rat> c;  // size order + 1

    USeries() : c(1) {}
    explicit USeries(int ord);

    static USeries unit(int ord);
    /// The monomial t.
    static USeries t(int ord);

    const Rat& coeff(int n) const;
    void set(int n, Rat v);

    bool is_unit() const;
    friend bool operator==(const USeries&, const USeries&) = default;
};

USeries add(const USeries& x, const USeries& y);
USeries sub(const USeries& x, const USeries& y);
USeries negate(const USeries& x);
USeries scale(const USeries& x, const Rat& s);
USeries mul(const USeries& x, const USeries& y);

inline USeries operator+(const USeries& x, const USeries& y) { return add(x, y); }
inline USeries operator-(const USeries& x, const USeries& y) { return sub(x, y); }
inline USeries operator-(const USeries& x) { return negate(x); }
inline USeries operator*(const USeries& x, const USeries& y) { return mul(x, y); }

/// Formal exponential; requires zero constant term.
USeries exp(const USeries& x);
/// Formal logarithm; requires constant term 1.
USeries log(const USeries& x);
/// x^e: repeated multiplication for nonnegative integer e, exp(e log x)
/// otherwise (then x must have constant term 1).
USeries pow(const USeries& x, const Rat& e);

/// Substitution t -> t^q; coefficient of t^n becomes x's coefficient of
/// t^(n/q) when q | n and 0 otherwise. q >= 1.
USeries subst_scale(const USeries& x, int q);

/// Copy re-truncated to `order` (coefficients beyond x.order are zero).
USeries truncated(const USeries& x, int order);

std::string to_string(const USeries& x);

}  // namespace grseries
