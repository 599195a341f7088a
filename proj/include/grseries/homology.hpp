#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace grseries {

/// A second-homology class, as integer coordinates in the model's basis.
struct HomologyClass {
    std::vector<std::int64_t> coords;

    HomologyClass() = default;
    explicit HomologyClass(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    bool is_zero() const;
    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
HomologyClass operator*(std::int64_t n, const HomologyClass& a);

/// Lexicographic coordinate order; used wherever classes key a map.
inline bool operator<(const HomologyClass& a, const HomologyClass& b) {
    return a.coords < b.coords;
}

enum class ClassKind { Exceptional, Toroidal, Generic };

const char* to_string(ClassKind k);

/// H_2(X;Z) as a rank-r lattice with its intersection pairing, the canonical
/// class (paired by plain dot product against coordinates) and a grading
/// functional used to truncate series.
class ManifoldModel {
public:
    ManifoldModel(int rank,
                  std::vector<std::int64_t> form_row_major,
                  std::vector<std::int64_t> kappa,
                  std::vector<std::int64_t> grading);

    int rank() const { return rank_; }
    const std::vector<std::int64_t>& form() const { return form_; }
    const std::vector<std::int64_t>& kappa() const { return kappa_; }
    const std::vector<std::int64_t>& grading() const { return grading_; }

    /// Intersection pairing A.B = A^T Q B; symmetric.
    std::int64_t intersect(const HomologyClass& a, const HomologyClass& b) const;
    std::int64_t self_intersect(const HomologyClass& a) const { return intersect(a, a); }
    std::int64_t kappa_dot(const HomologyClass& a) const;
    std::int64_t grade(const HomologyClass& a) const;

    friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;

private:
    void check_class(const HomologyClass& a) const;

    int rank_;
    std::vector<std::int64_t> form_;  // row-major, symmetric
    std::vector<std::int64_t> kappa_;
    std::vector<std::int64_t> grading_;
};

using ModelPtr = std::shared_ptr<const ManifoldModel>;

/// Exceptional iff A^2 = -1; toroidal iff A^2 = 0 and kappa.A = 0.
ClassKind classify(const ManifoldModel& m, const HomologyClass& a);

/// d_A = (A.A - kappa.A)/2, the number of point constraints. Exceptional and
/// toroidal classes carry d_A = 0 regardless of the formula. May be negative
/// for classes outside any curve table; table validation rejects those.
std::int64_t point_constraints(const ManifoldModel& m, const HomologyClass& a);

/// g_A = 1 + (A.A + kappa.A)/2.
std::int64_t taubes_genus(const ManifoldModel& m, const HomologyClass& a);

/// delta = d_A - d, the double-point count; requires 0 <= d <= d_A.
std::int64_t double_points(const ManifoldModel& m, const HomologyClass& a, std::int64_t d);

/// gcd of the coordinates (0 for the zero class).
std::int64_t content(const HomologyClass& a);
bool is_primitive(const HomologyClass& a);
/// a divided by its content; a must be nonzero.
HomologyClass primitive_root(const HomologyClass& a);

}  // namespace grseries
