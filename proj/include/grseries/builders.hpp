#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grseries/genfuncs.hpp"
#include "grseries/homology.hpp"
#include "grseries/lattices.hpp"
#include "grseries/powerseries.hpp"

namespace grseries {

struct ClassLess {
    bool operator()(const HomologyClass& a, const HomologyClass& b) const {
        return a.coords < b.coords;
    }
};

/// Curve counts for one generic class: d -> Gr(A,d) for 0 <= d <= d_A.
struct GenericEntry {
    HomologyClass cls;
    std::map<std::int64_t, std::int64_t> counts;
};

struct ExceptionalEntry {
    HomologyClass cls;
    std::int64_t count = 0;
};

/// The input data both series are built from: counts for generic classes,
/// counts for exceptional spheres, and a list of embedded tori. Toroidal
/// counts are always derived from the tori, never supplied.
struct CurveTable {
    std::vector<GenericEntry> generic;
    std::vector<ExceptionalEntry> exceptional;
    std::vector<TorusData> tori;
};

/// Checks every table invariant: kinds, positive grading, count ranges.
void validate_table(const ManifoldModel& model, const CurveTable& table);

/// Signed per-type torus counts tau(A,k), keyed by (class, type). Absent
/// entries are zero.
using TauTable = std::map<std::pair<HomologyClass, int>, std::int64_t>;
TauTable tau_table(const ManifoldModel& model, const CurveTable& table, std::int64_t torder);

/// The Taubes series: product of e(t_E)^Gr(E,0), g(t_A s^d/d!)^Gr(A,d) and
/// f_k(t_A)^tau(A,k) factors, truncated.
Series build_GT(const ModelPtr& model, const CurveTable& table, const GenFuncChoice& gens,
                std::int64_t torder, std::int64_t sorder);

/// Multiple-cover torus counts RT(B,0): every torus C contributes
/// signed_sum(m, C)/m at the class m[C]. Genuinely rational.
std::map<HomologyClass, Rat, ClassLess> rt_torus_counts(const ManifoldModel& model,
                                                        const CurveTable& table,
                                                        std::int64_t torder);

/// The Ruan-Tian series: same e and g factors (the counts coincide for
/// non-toroidal classes), with F(t_B)^RT(B,0) torus factors.
Series build_RT(const ModelPtr& model, const CurveTable& table, const GenFuncChoice& gens,
                std::int64_t torder, std::int64_t sorder);

/// Gr_delta(A) = d! * [t_A s^d] series with d = d_A - delta; asserts the
/// result is an integer.
Int extract(const Series& series, const HomologyClass& a, std::int64_t delta);

/// All nonzero rows (class, delta) -> Gr_delta(A) within the series bounds.
/// Propagates extract's integrality assertion row by row.
struct InvariantExpansion {
    std::map<std::pair<HomologyClass, std::int64_t>, Int> rows;
};
InvariantExpansion extract_all(const Series& series);

/// Every nonnegative combination of table classes of grading at most torder
/// (including the zero class): the classes whose coefficients the table can
/// reach.
std::vector<HomologyClass> reachable_classes(const ManifoldModel& model, const CurveTable& table,
                                             std::int64_t torder);

/// Whether the table satisfies the hypotheses under which the degree-zero
/// closed form is valid: generic classes of nonnegative square, exceptional
/// classes with kappa.E = -1 and count in {0,1}, pairwise nonnegative
/// intersections. `reason` (optional) receives the first violation.
bool gr0_admissible(const ManifoldModel& model, const CurveTable& table,
                    std::string* reason = nullptr);

/// Degree-zero invariant of A by decomposition enumeration: sums R(y')Q(y'')
/// over decompositions of A into table classes with unit multiplicities off
/// square zero, orthogonal parts, and top point counts. Audits the
/// double-point expansion term by term for every contributing decomposition
/// and computes the torus coefficients Q(n,A) both by series extraction and
/// by the brute-force multiset sum; any disagreement throws.
Int taubes_gr0_closed(const ManifoldModel& model, const CurveTable& table,
                      const HomologyClass& a);

struct Gr0Mismatch {
    HomologyClass cls;
    Int extracted;
    Int closed;
};

struct TheoremReport {
    Series gt;
    Series rt;
    Series diff;
    bool series_equal = false;
    std::optional<Monomial> first_diff;
    bool gr0_checked = false;
    std::string gr0_skip_reason;
    std::size_t gr0_classes_checked = 0;
    std::vector<Gr0Mismatch> gr0_mismatches;

    bool passed() const { return series_equal && gr0_mismatches.empty(); }
};

/// Builds GT with (e, g, f_from_F(F)) and RT with (e, g, F), compares them,
/// and cross-checks the extracted degree-zero invariants against the closed
/// form for every reachable class within bounds.
TheoremReport verify_main_theorem(const ModelPtr& model, const CurveTable& table,
                                  std::int64_t torder, std::int64_t sorder);

}  // namespace grseries
