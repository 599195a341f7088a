#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "grseries/homology.hpp"
#include "grseries/rational.hpp"
#include "grseries/useries.hpp"

namespace grseries {

/// A monomial t_A s^d. Class exponents live in the coordinate vector, so the
/// relation t_{A+B} = t_A t_B is automatic.
struct Monomial {
    HomologyClass cls;
    std::int64_t sdeg = 0;

    bool is_unit() const { return sdeg == 0 && cls.is_zero(); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, std::int64_t n);

/// Canonical term order: grading degree, then lexicographic class
/// coordinates, then s-degree. Also the serialization order.
struct MonomialOrder {
    ModelPtr model;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Truncated multivariate formal power series over monomials t_A s^d with
/// exact rational coefficients. Terms are kept iff grade(cls) <= torder and
/// sdeg <= sorder; stored coefficients are never zero.
class Series {
public:
    using TermMap = std::map<Monomial, Rat, MonomialOrder>;

    Series(ModelPtr model, std::int64_t torder, std::int64_t sorder);
    static Series unit(ModelPtr model, std::int64_t torder, std::int64_t sorder);

    const ModelPtr& model() const { return model_; }
    std::int64_t torder() const { return torder_; }
    std::int64_t sorder() const { return sorder_; }
    const TermMap& terms() const { return terms_; }

    bool in_bounds(const Monomial& m) const;
    /// Accumulates c onto m, silently dropping out-of-bounds monomials.
    void add_term(const Monomial& m, const Rat& c);
    /// Stored coefficient or zero; monomials outside the truncation bounds
    /// were lost to truncation, so asking for them is a domain error.
    Rat coeff(const Monomial& m) const;

    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const Series& a, const Series& b);

private:
    ModelPtr model_;
    std::int64_t torder_;
    std::int64_t sorder_;
    TermMap terms_;
};

Series add(const Series& x, const Series& y);
Series sub(const Series& x, const Series& y);
Series negate(const Series& x);
Series scale(const Series& x, const Rat& s);
/// Convolution product, truncated. Evaluates in parallel for large inputs
/// unless GRSERIES_NO_PARALLEL=1; the result is identical either way.
Series mul(const Series& x, const Series& y);

inline Series operator+(const Series& x, const Series& y) { return add(x, y); }
inline Series operator-(const Series& x, const Series& y) { return sub(x, y); }
inline Series operator-(const Series& x) { return negate(x); }
inline Series operator*(const Series& x, const Series& y) { return mul(x, y); }

/// Formal exponential; requires zero constant term (every term must have
/// positive combined degree).
Series exp(const Series& x);
/// Formal logarithm; requires constant term 1.
Series log(const Series& x);
/// x^e: repeated multiplication for nonnegative integer e, otherwise
/// exp(e log x) with constant term 1 required.
Series pow(const Series& x, const Rat& e);

/// Composition g(c * m): sum_n g_n c^n m^n, truncated. m must not be the
/// unit monomial and must have positive grading or s-degree.
Series plug_monomial(const USeries& g, const Monomial& m, const Rat& c,
                     ModelPtr model, std::int64_t torder, std::int64_t sorder);

/// Canonical text: one term per line, "coeff * t[c1,...,cr] * s^d" with the
/// class factor omitted for the zero class and the s factor for s^0; "0" for
/// the zero series.
std::string canonical_text(const Series& x);

}  // namespace grseries
