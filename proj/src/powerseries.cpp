#include "grseries/powerseries.hpp"

#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

namespace grseries {

Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{a.cls + b.cls, a.sdeg + b.sdeg};
}

Monomial pow(const Monomial& m, std::int64_t n) {
    return Monomial{n * m.cls, n * m.sdeg};
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const std::int64_t ga = model->grade(a.cls);
    const std::int64_t gb = model->grade(b.cls);
    if (ga != gb) return ga < gb;
    if (a.cls.coords != b.cls.coords) return a.cls.coords < b.cls.coords;
    return a.sdeg < b.sdeg;
}

Series::Series(ModelPtr model, std::int64_t torder, std::int64_t sorder)
    : model_(std::move(model)),
      torder_(torder),
      sorder_(sorder),
      terms_(MonomialOrder{model_}) {
    if (!model_) throw std::domain_error("series: null model");
    if (torder_ < 0 || sorder_ < 0) throw std::domain_error("series: negative truncation bound");
}

Series Series::unit(ModelPtr model, std::int64_t torder, std::int64_t sorder) {
    Series r(std::move(model), torder, sorder);
    Monomial one{HomologyClass(std::vector<std::int64_t>(r.model_->rank(), 0)), 0};
    r.terms_.emplace(std::move(one), Rat(1));
    return r;
}

bool Series::in_bounds(const Monomial& m) const {
    const std::int64_t g = model_->grade(m.cls);
    return g >= 0 && g <= torder_ && m.sdeg >= 0 && m.sdeg <= sorder_;
}

void Series::add_term(const Monomial& m, const Rat& c) {
    if (c == 0 || !in_bounds(m)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Series::coeff(const Monomial& m) const {
    if (!in_bounds(m))
        throw std::domain_error("series coeff: monomial outside truncation bounds");
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool operator==(const Series& a, const Series& b) {
    return *a.model_ == *b.model_ && a.torder_ == b.torder_ && a.sorder_ == b.sorder_ &&
           a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin());
}

namespace {

void require_compatible(const Series& x, const Series& y) {
    if (!(*x.model() == *y.model()))
        throw std::domain_error("series: model mismatch");
    if (x.torder() != y.torder() || x.sorder() != y.sorder())
        throw std::domain_error("series: truncation bound mismatch");
}

bool parallel_enabled() {
    const char* v = std::getenv("GRSERIES_NO_PARALLEL");
    return !(v != nullptr && v[0] == '1');
}

Series mul_range(const Series& x, const Series& y,
                 Series::TermMap::const_iterator first, Series::TermMap::const_iterator last) {
    Series r(x.model(), x.torder(), x.sorder());
    for (auto it = first; it != last; ++it)
        for (const auto& [my, cy] : y.terms()) r.add_term(it->first * my, it->second * cy);
    return r;
}

}  // namespace

Series add(const Series& x, const Series& y) {
    require_compatible(x, y);
    Series r = x;
    for (const auto& [m, c] : y.terms()) r.add_term(m, c);
    return r;
}

Series sub(const Series& x, const Series& y) {
    require_compatible(x, y);
    Series r = x;
    for (const auto& [m, c] : y.terms()) r.add_term(m, -c);
    return r;
}

Series negate(const Series& x) {
    Series r(x.model(), x.torder(), x.sorder());
    for (const auto& [m, c] : x.terms()) r.add_term(m, -c);
    return r;
}

Series scale(const Series& x, const Rat& s) {
    Series r(x.model(), x.torder(), x.sorder());
    if (s == 0) return r;
    for (const auto& [m, c] : x.terms()) r.add_term(m, c * s);
    return r;
}

Series mul(const Series& x, const Series& y) {
    require_compatible(x, y);
    const std::size_t work = x.terms().size() * y.terms().size();
    const unsigned hw = std::thread::hardware_concurrency();
    if (work >= 4096 && hw > 1 && parallel_enabled()) {
        // Partition the left factor; partial sums merge in chunk order. The
        // arithmetic is exact, so the result matches the sequential product.
        const std::size_t nchunks = std::min<std::size_t>(hw, 8);
        const std::size_t per = (x.terms().size() + nchunks - 1) / nchunks;
        std::vector<std::future<Series>> parts;
        auto it = x.terms().begin();
        std::size_t left = x.terms().size();
        while (left > 0) {
            const std::size_t take = std::min(per, left);
            auto first = it;
            std::advance(it, static_cast<std::ptrdiff_t>(take));
            left -= take;
            parts.push_back(std::async(std::launch::async, mul_range, std::cref(x), std::cref(y),
                                       first, it));
        }
        Series r(x.model(), x.torder(), x.sorder());
        for (auto& f : parts) {
            Series part = f.get();
            for (const auto& [m, c] : part.terms()) r.add_term(m, c);
        }
        return r;
    }
    return mul_range(x, y, x.terms().begin(), x.terms().end());
}

namespace {

// exp/log need every term to sit strictly above the unit monomial, so that
// powers eventually leave the truncation box.
void require_positive_degrees(const Series& x, const char* what) {
    for (const auto& [m, c] : x.terms())
        if (x.model()->grade(m.cls) == 0 && m.sdeg == 0)
            throw std::domain_error(std::string(what) + ": term of combined degree zero");
}

}  // namespace

Series exp(const Series& x) {
    Monomial one{HomologyClass(std::vector<std::int64_t>(x.model()->rank(), 0)), 0};
    if (x.coeff(one) != 0) throw std::domain_error("series exp: nonzero constant term");
    require_positive_degrees(x, "series exp");
    const std::int64_t n = x.torder() + x.sorder();
    Series r = Series::unit(x.model(), x.torder(), x.sorder());
    for (std::int64_t k = n; k >= 1; --k)
        r = add(Series::unit(x.model(), x.torder(), x.sorder()), scale(mul(x, r), Rat(1, k)));
    return r;
}

Series log(const Series& x) {
    Monomial one{HomologyClass(std::vector<std::int64_t>(x.model()->rank(), 0)), 0};
    if (x.coeff(one) != 1) throw std::domain_error("series log: constant term must be 1");
    Series u = sub(x, Series::unit(x.model(), x.torder(), x.sorder()));
    require_positive_degrees(u, "series log");
    const std::int64_t n = x.torder() + x.sorder();
    Series r(x.model(), x.torder(), x.sorder());
    Series p = Series::unit(x.model(), x.torder(), x.sorder());
    for (std::int64_t k = 1; k <= n; ++k) {
        p = mul(p, u);
        if (p.is_zero()) break;
        r = add(r, scale(p, Rat(k % 2 == 1 ? 1 : -1, k)));
    }
    return r;
}

Series pow(const Series& x, const Rat& e) {
    if (is_integer(e) && numerator(e) >= 0) {
        Int k = numerator(e);
        Series base = x;
        Series r = Series::unit(x.model(), x.torder(), x.sorder());
        while (k > 0) {
            if ((k & 1) != 0) r = mul(r, base);
            k >>= 1;
            if (k > 0) base = mul(base, base);
        }
        return r;
    }
    Monomial one{HomologyClass(std::vector<std::int64_t>(x.model()->rank(), 0)), 0};
    if (x.coeff(one) != 1)
        throw std::domain_error("series pow: fractional or negative exponent needs constant term 1");
    return exp(scale(log(x), e));
}

Series plug_monomial(const USeries& g, const Monomial& m, const Rat& c,
                     ModelPtr model, std::int64_t torder, std::int64_t sorder) {
    if (m.is_unit())
        throw std::domain_error("plug_monomial: composition with the unit monomial");
    const std::int64_t gr = model->grade(m.cls);
    if (gr < 0 || m.sdeg < 0)
        throw std::domain_error("plug_monomial: monomial with negative degree");
    if (gr == 0 && m.sdeg == 0)
        throw std::domain_error("plug_monomial: monomial of combined degree zero");

    std::int64_t nmax = g.order;
    if (gr > 0) nmax = std::min<std::int64_t>(nmax, torder / gr);
    if (m.sdeg > 0) nmax = std::min<std::int64_t>(nmax, sorder / m.sdeg);

    Series r(std::move(model), torder, sorder);
    Rat cn = 1;
    for (std::int64_t n = 0; n <= nmax; ++n) {
        r.add_term(pow(m, n), g.coeff(static_cast<int>(n)) * cn);
        cn *= c;
    }
    return r;
}

std::string canonical_text(const Series& x) {
    if (x.is_zero()) return "0\n";
    std::string out;
    for (const auto& [m, c] : x.terms()) {
        out += rat_to_string(c);
        if (!m.cls.is_zero()) {
            out += " * t[";
            for (std::size_t i = 0; i < m.cls.coords.size(); ++i) {
                if (i > 0) out += ",";
                out += std::to_string(m.cls.coords[i]);
            }
            out += "]";
        }
        if (m.sdeg > 0) out += " * s^" + std::to_string(m.sdeg);
        out += "\n";
    }
    return out;
}

}  // namespace grseries
