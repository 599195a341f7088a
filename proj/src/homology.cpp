#include "grseries/homology.hpp"

#include <numeric>
#include <stdexcept>

namespace grseries {

bool HomologyClass::is_zero() const {
    for (auto c : coords)
        if (c != 0) return false;
    return true;
}

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
    if (a.coords.size() != b.coords.size())
        throw std::domain_error("class addition: rank mismatch");
    HomologyClass r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

HomologyClass operator*(std::int64_t n, const HomologyClass& a) {
    HomologyClass r = a;
    for (auto& c : r.coords) c *= n;
    return r;
}

const char* to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Exceptional: return "exceptional";
        case ClassKind::Toroidal: return "toroidal";
        case ClassKind::Generic: return "generic";
    }
    return "?";
}

ManifoldModel::ManifoldModel(int rank,
                             std::vector<std::int64_t> form_row_major,
                             std::vector<std::int64_t> kappa,
                             std::vector<std::int64_t> grading)
    : rank_(rank),
      form_(std::move(form_row_major)),
      kappa_(std::move(kappa)),
      grading_(std::move(grading)) {
    if (rank_ <= 0) throw std::domain_error("model: rank must be positive");
    if (form_.size() != static_cast<std::size_t>(rank_) * rank_)
        throw std::domain_error("model: form must be rank x rank");
    if (kappa_.size() != static_cast<std::size_t>(rank_))
        throw std::domain_error("model: kappa length must equal rank");
    if (grading_.size() != static_cast<std::size_t>(rank_))
        throw std::domain_error("model: grading length must equal rank");
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (form_[i * rank_ + j] != form_[j * rank_ + i])
                throw std::domain_error("model: intersection form must be symmetric");
}

void ManifoldModel::check_class(const HomologyClass& a) const {
    if (a.coords.size() != static_cast<std::size_t>(rank_))
        throw std::domain_error("class coordinate length does not match model rank");
}

std::int64_t ManifoldModel::intersect(const HomologyClass& a, const HomologyClass& b) const {
    check_class(a);
    check_class(b);
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a.coords[i] == 0) continue;
        std::int64_t row = 0;
        for (int j = 0; j < rank_; ++j) row += form_[i * rank_ + j] * b.coords[j];
        s += a.coords[i] * row;
    }
    return s;
}

std::int64_t ManifoldModel::kappa_dot(const HomologyClass& a) const {
    check_class(a);
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += kappa_[i] * a.coords[i];
    return s;
}

std::int64_t ManifoldModel::grade(const HomologyClass& a) const {
    check_class(a);
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += grading_[i] * a.coords[i];
    return s;
}

ClassKind classify(const ManifoldModel& m, const HomologyClass& a) {
    const std::int64_t sq = m.self_intersect(a);
    if (sq == -1) return ClassKind::Exceptional;
    if (sq == 0 && m.kappa_dot(a) == 0) return ClassKind::Toroidal;
    return ClassKind::Generic;
}

namespace {

std::int64_t half_even(std::int64_t v, const char* what) {
    if (v % 2 != 0)
        throw std::domain_error(std::string(what) + ": A.A + kappa.A must be even");
    return v / 2;
}

}  // namespace

std::int64_t point_constraints(const ManifoldModel& m, const HomologyClass& a) {
    if (classify(m, a) != ClassKind::Generic) return 0;
    return half_even(m.self_intersect(a) - m.kappa_dot(a), "point_constraints");
}

std::int64_t taubes_genus(const ManifoldModel& m, const HomologyClass& a) {
    return 1 + half_even(m.self_intersect(a) + m.kappa_dot(a), "taubes_genus");
}

std::int64_t double_points(const ManifoldModel& m, const HomologyClass& a, std::int64_t d) {
    const std::int64_t da = point_constraints(m, a);
    if (d < 0 || d > da) throw std::domain_error("double_points: d out of range [0, d_A]");
    return da - d;
}

std::int64_t content(const HomologyClass& a) {
    std::int64_t g = 0;
    for (auto c : a.coords) g = std::gcd(g, c);
    return g;
}

bool is_primitive(const HomologyClass& a) { return content(a) == 1; }

HomologyClass primitive_root(const HomologyClass& a) {
    const std::int64_t g = content(a);
    if (g == 0) throw std::domain_error("primitive_root: zero class");
    HomologyClass r = a;
    for (auto& c : r.coords) c /= g;
    return r;
}

}  // namespace grseries
