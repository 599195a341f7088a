#include "grseries/builders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "grseries/numtheory.hpp"

namespace grseries {

namespace {

void require_positive_grade(const ManifoldModel& model, const HomologyClass& cls,
                            const char* what) {
    if (model.grade(cls) <= 0)
        throw std::domain_error(std::string(what) + ": class must have positive grading");
}

void check_gens(const GenFuncChoice& gens, GenFuncFlavor want, std::int64_t torder) {
    if (gens.flavor != want)
        throw std::domain_error("builder: generating-function flavor mismatch");
    if (gens.e.c[0] != 1 || gens.g.c[0] != 1 || gens.f_or_F.c[0] != 1)
        throw std::domain_error("builder: generating functions must have constant term 1");
    if (gens.e.order < torder || gens.g.order < torder || gens.f_or_F.order < torder)
        throw std::domain_error("builder: generating functions truncated below t-order");
}

// Binomial coefficient with arbitrary integer top, C(g,n) = g(g-1)...(g-n+1)/n!.
Rat binom(std::int64_t g, std::int64_t n) {
    Rat r = 1;
    for (std::int64_t k = 0; k < n; ++k) r *= Rat(g - k);
    return r / Rat(factorial(static_cast<int>(n)));
}

}  // namespace

void validate_table(const ManifoldModel& model, const CurveTable& table) {
    std::set<HomologyClass> seen;
    for (const GenericEntry& entry : table.generic) {
        if (classify(model, entry.cls) != ClassKind::Generic)
            throw std::domain_error("table: class listed as generic is not generic");
        require_positive_grade(model, entry.cls, "table generic");
        if (!seen.insert(entry.cls).second)
            throw std::domain_error("table: duplicate generic class");
        const std::int64_t da = point_constraints(model, entry.cls);
        if (da < 0) throw std::domain_error("table: generic class with negative d_A");
        for (const auto& [d, count] : entry.counts) {
            (void)count;
            if (d < 0 || d > da)
                throw std::domain_error("table: count index d outside [0, d_A]");
        }
    }
    for (const ExceptionalEntry& entry : table.exceptional) {
        if (classify(model, entry.cls) != ClassKind::Exceptional)
            throw std::domain_error("table: class listed as exceptional is not exceptional");
        require_positive_grade(model, entry.cls, "table exceptional");
        if (!seen.insert(entry.cls).second)
            throw std::domain_error("table: duplicate exceptional class");
    }
    for (const TorusData& torus : table.tori) {
        if (classify(model, torus.cls) != ClassKind::Toroidal)
            throw std::domain_error("table: torus class is not toroidal");
        require_positive_grade(model, torus.cls, "table torus");
    }
}

TauTable tau_table(const ManifoldModel& model, const CurveTable& table, std::int64_t torder) {
    TauTable tau;
    for (const TorusData& torus : table.tori) {
        if (model.grade(torus.cls) > torder) continue;
        auto key = std::make_pair(torus.cls, torus.type());
        tau[key] += torus.sgn_d0;
        if (tau[key] == 0) tau.erase(key);
    }
    return tau;
}

namespace {

// Factor order for deterministic assembly and a tight univariate bound.
std::int64_t univariate_bound(const ManifoldModel& model, const HomologyClass& cls,
                              std::int64_t sdeg, std::int64_t torder, std::int64_t sorder) {
    std::int64_t n = torder / std::max<std::int64_t>(model.grade(cls), 1);
    if (sdeg > 0) n = std::min(n, sorder / sdeg);
    return std::max<std::int64_t>(n, 0);
}

Series shared_factors(const ModelPtr& model, const CurveTable& table, const GenFuncChoice& gens,
                      std::int64_t torder, std::int64_t sorder) {
    Series result = Series::unit(model, torder, sorder);

    std::vector<const ExceptionalEntry*> exc;
    for (const auto& e : table.exceptional) exc.push_back(&e);
    std::sort(exc.begin(), exc.end(), [&](auto* a, auto* b) {
        const auto ga = model->grade(a->cls), gb = model->grade(b->cls);
        return ga != gb ? ga < gb : a->cls < b->cls;
    });
    for (const ExceptionalEntry* entry : exc) {
        if (entry->count == 0 || model->grade(entry->cls) > torder) continue;
        const auto ord = univariate_bound(*model, entry->cls, 0, torder, sorder);
        const USeries u = pow(truncated(gens.e, static_cast<int>(ord)), Rat(entry->count));
        result = mul(result, plug_monomial(u, Monomial{entry->cls, 0}, 1, model, torder, sorder));
    }

    std::vector<const GenericEntry*> gen;
    for (const auto& e : table.generic) gen.push_back(&e);
    std::sort(gen.begin(), gen.end(), [&](auto* a, auto* b) {
        const auto ga = model->grade(a->cls), gb = model->grade(b->cls);
        return ga != gb ? ga < gb : a->cls < b->cls;
    });
    for (const GenericEntry* entry : gen) {
        if (model->grade(entry->cls) > torder) continue;
        for (const auto& [d, count] : entry->counts) {
            if (count == 0 || d > sorder) continue;
            const auto ord = univariate_bound(*model, entry->cls, d, torder, sorder);
            const USeries u = pow(truncated(gens.g, static_cast<int>(ord)), Rat(count));
            const Rat c = Rat(Int(1), factorial(static_cast<int>(d)));
            result = mul(result, plug_monomial(u, Monomial{entry->cls, d}, c, model, torder, sorder));
        }
    }
    return result;
}

}  // namespace

Series build_GT(const ModelPtr& model, const CurveTable& table, const GenFuncChoice& gens,
                std::int64_t torder, std::int64_t sorder) {
    check_gens(gens, GenFuncFlavor::TaubesF, torder);
    validate_table(*model, table);

    Series result = shared_factors(model, table, gens, torder, sorder);

    const auto fam = wall_crossing_family(truncated(gens.f_or_F, static_cast<int>(torder)));
    for (const auto& [key, count] : tau_table(*model, table, torder)) {
        const auto& [cls, type] = key;
        const auto ord = univariate_bound(*model, cls, 0, torder, sorder);
        const USeries u = pow(truncated(fam[static_cast<std::size_t>(type)],
                                        static_cast<int>(ord)),
                              Rat(count));
        result = mul(result, plug_monomial(u, Monomial{cls, 0}, 1, model, torder, sorder));
    }
    return result;
}

std::map<HomologyClass, Rat, ClassLess> rt_torus_counts(const ManifoldModel& model,
                                                        const CurveTable& table,
                                                        std::int64_t torder) {
    std::map<HomologyClass, Rat, ClassLess> counts;
    for (const TorusData& torus : table.tori) {
        const std::int64_t g = model.grade(torus.cls);
        if (g <= 0) throw std::domain_error("rt_torus_counts: torus class needs positive grading");
        for (std::int64_t m = 1; m * g <= torder; ++m)
            counts[m * torus.cls] += Rat(Int(signed_sum(m, torus)), Int(m));
    }
    for (auto it = counts.begin(); it != counts.end();)
        it = it->second == 0 ? counts.erase(it) : std::next(it);
    return counts;
}

Series build_RT(const ModelPtr& model, const CurveTable& table, const GenFuncChoice& gens,
                std::int64_t torder, std::int64_t sorder) {
    check_gens(gens, GenFuncFlavor::RuanTianF, torder);
    validate_table(*model, table);

    Series result = shared_factors(model, table, gens, torder, sorder);

    // Group the derived counts by primitive ray; the whole ray factor
    // prod_n F(u^n)^{RT(nR,0)} is assembled in log domain and plugged once.
    std::map<HomologyClass, std::vector<std::pair<std::int64_t, Rat>>, ClassLess> rays;
    for (const auto& [cls, c] : rt_torus_counts(*model, table, torder))
        rays[primitive_root(cls)].emplace_back(content(cls), c);

    for (const auto& [ray, exponents] : rays) {
        const int ord = static_cast<int>(univariate_bound(*model, ray, 0, torder, sorder));
        const USeries logF = log(truncated(gens.f_or_F, ord));
        USeries acc(ord);
        for (const auto& [n, c] : exponents) {
            if (n > ord) continue;
            acc = add(acc, scale(subst_scale(logF, static_cast<int>(n)), c));
        }
        result = mul(result, plug_monomial(exp(acc), Monomial{ray, 0}, 1, model, torder, sorder));
    }
    return result;
}

Int extract(const Series& series, const HomologyClass& a, std::int64_t delta) {
    if (delta < 0) throw std::domain_error("extract: delta must be nonnegative");
    const std::int64_t d = point_constraints(*series.model(), a) - delta;
    if (d < 0) throw std::domain_error("extract: delta exceeds d_A");
    const Rat v = series.coeff(Monomial{a, d}) * Rat(factorial(static_cast<int>(d)));
    if (!is_integer(v)) {
        std::string where = "[";
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            where += (i ? "," : "") + std::to_string(a.coords[i]);
        throw std::logic_error("extract: invariant at class " + where + "] delta " +
                               std::to_string(delta) + " is " + rat_to_string(v) +
                               ", not an integer");
    }
    return numerator(v);
}

InvariantExpansion extract_all(const Series& series) {
    InvariantExpansion out;
    std::set<HomologyClass> classes;
    for (const auto& [m, c] : series.terms()) classes.insert(m.cls);
    for (const HomologyClass& cls : classes) {
        if (cls.is_zero()) continue;
        const std::int64_t da = point_constraints(*series.model(), cls);
        if (da < 0) continue;
        for (std::int64_t delta = std::max<std::int64_t>(0, da - series.sorder()); delta <= da;
             ++delta) {
            const Int v = extract(series, cls, delta);
            if (v != 0) out.rows.emplace(std::make_pair(cls, delta), v);
        }
    }
    return out;
}

bool gr0_admissible(const ManifoldModel& model, const CurveTable& table, std::string* reason) {
    auto fail = [&](std::string why) {
        if (reason) *reason = std::move(why);
        return false;
    };
    std::vector<HomologyClass> classes;
    for (const auto& e : table.generic) {
        if (model.self_intersect(e.cls) < 0)
            return fail("generic class with negative self-intersection");
        classes.push_back(e.cls);
    }
    for (const auto& e : table.exceptional) {
        if (model.kappa_dot(e.cls) != -1)
            return fail("exceptional class with kappa.E != -1");
        if (e.count != 0 && e.count != 1)
            return fail("exceptional count outside {0,1}");
        classes.push_back(e.cls);
    }
    for (const auto& t : table.tori) classes.push_back(t.cls);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (model.intersect(classes[i], classes[j]) < 0)
                return fail("table classes with negative pairwise intersection");
    return true;
}

namespace {

// Decomposition machinery for the degree-zero closed form. Each table class
// (and each primitive toroidal ray) is an axis; a decomposition picks one
// multiplicity profile per axis.
class Gr0Engine {
public:
    Gr0Engine(const ManifoldModel& model, const CurveTable& table)
        : model_(model) {
        validate_table(model, table);
        for (const auto& e : table.generic) {
            Axis ax;
            ax.cls = e.cls;
            ax.grade = model.grade(e.cls);
            ax.sq = model.self_intersect(e.cls);
            ax.d_top = point_constraints(model, e.cls);
            ax.kind = Axis::Generic;
            for (const auto& [d, count] : e.counts)
                if (count != 0) ax.gen_counts.emplace_back(d, count);
            axes_.push_back(std::move(ax));
        }
        for (const auto& e : table.exceptional) {
            Axis ax;
            ax.cls = e.cls;
            ax.grade = model.grade(e.cls);
            ax.sq = model.self_intersect(e.cls);
            ax.d_top = 0;
            ax.kind = Axis::Exceptional;
            ax.exc_count = e.count;
            axes_.push_back(std::move(ax));
        }
        std::map<HomologyClass, std::vector<RayCover>, ClassLess> rays;
        for (const auto& t : table.tori)
            rays[primitive_root(t.cls)].push_back(
                RayCover{content(t.cls), t.type(), t.sgn_d0});
        for (auto& [ray, covers] : rays) {
            Axis ax;
            ax.cls = ray;
            ax.grade = model.grade(ray);
            ax.sq = 0;
            ax.d_top = 0;
            ax.kind = Axis::Ray;
            ax.covers = std::move(covers);
            axes_.push_back(std::move(ax));
        }
    }

    Int gr0(const HomologyClass& a) {
        target_ = a;
        d_target_ = point_constraints(model_, a);
        if (d_target_ < 0)
            throw std::domain_error("taubes_gr0_closed: class with negative d_A");
        grade_target_ = model_.grade(a);
        if (grade_target_ < 0)
            throw std::domain_error("taubes_gr0_closed: class with negative grading");
        slot_sum_ = 0;
        chosen_.clear();
        descend(0, HomologyClass(std::vector<std::int64_t>(model_.rank(), 0)), 0, 0);
        const Rat total = slot_sum_ * Rat(factorial(static_cast<int>(d_target_)));
        if (!is_integer(total))
            throw std::logic_error("taubes_gr0_closed: non-integral invariant");
        return numerator(total);
    }

private:
    struct RayCover {
        std::int64_t q;
        int type;
        int sgn;
    };

    struct Axis {
        enum Kind { Generic, Exceptional, Ray } kind = Generic;
        HomologyClass cls;
        std::int64_t grade = 0;
        std::int64_t sq = 0;
        std::int64_t d_top = 0;
        std::vector<std::pair<std::int64_t, std::int64_t>> gen_counts;  // (d, Gr(A,d))
        std::int64_t exc_count = 0;
        std::vector<RayCover> covers;
        mutable std::map<std::int64_t, Rat> q_cache;
    };

    struct Choice {
        const Axis* axis = nullptr;
        std::int64_t n = 0;            // total multiplicity of the class
        std::int64_t sdeg = 0;         // s-degree contributed
        std::int64_t delta_excess = 0; // sum over copies of (d_top - d)
        Rat coeff;
    };

    // Coefficient of t^n in prod_C f_C(t^{q_C}) for the Taubes choice
    // f = 1/(1-t), where f_C is f_{type} for positive curves and its inverse
    // for negative ones. Computed by series extraction and revalidated by
    // the brute-force sum over multiplicity assignments.
    Rat ray_q(const Axis& ax, std::int64_t n) const {
        if (n == 0) return 1;
        auto it = ax.q_cache.find(n);
        if (it != ax.q_cache.end()) return it->second;

        const int ord = static_cast<int>(n);
        const auto fam = wall_crossing_family(geometric(ord));
        std::vector<USeries> per_curve;
        USeries prod = USeries::unit(ord);
        for (const RayCover& c : ax.covers) {
            USeries fc = pow(fam[static_cast<std::size_t>(c.type)], Rat(c.sgn));
            per_curve.push_back(fc);
            if (c.q <= n) prod = mul(prod, subst_scale(fc, static_cast<int>(c.q)));
        }
        const Rat extracted = prod.c[static_cast<std::size_t>(n)];

        // Multiset route: assignments m_C >= 0 with sum m_C q_C = n.
        Rat brute = 0;
        enumerate_multisets(ax, per_curve, 0, n, Rat(1), brute);
        if (extracted != brute)
            throw std::logic_error("taubes_gr0_closed: torus coefficient routes disagree");

        ax.q_cache.emplace(n, extracted);
        return extracted;
    }

    void enumerate_multisets(const Axis& ax, const std::vector<USeries>& per_curve,
                             std::size_t idx, std::int64_t remaining, Rat acc,
                             Rat& out) const {
        if (idx == ax.covers.size()) {
            if (remaining == 0) out += acc;
            return;
        }
        const std::int64_t q = ax.covers[idx].q;
        for (std::int64_t m = 0; m * q <= remaining; ++m) {
            const Rat r = per_curve[idx].c[static_cast<std::size_t>(m)];
            if (r != 0) enumerate_multisets(ax, per_curve, idx + 1, remaining - m * q, acc * r, out);
        }
    }

    void profiles_for(const Axis& ax, std::int64_t grade_budget,
                      std::vector<Choice>& out) const {
        const std::int64_t nmax = ax.grade > 0 ? grade_budget / ax.grade : 0;
        switch (ax.kind) {
            case Axis::Exceptional:
                for (std::int64_t n = 0; n <= nmax; ++n) {
                    const Rat c = binom(ax.exc_count, n);
                    if (c != 0) out.push_back({&ax, n, 0, 0, c});
                }
                break;
            case Axis::Ray:
                for (std::int64_t n = 0; n <= nmax; ++n) {
                    const Rat c = ray_q(ax, n);
                    if (c != 0) out.push_back({&ax, n, 0, 0, c});
                }
                break;
            case Axis::Generic: {
                Choice base{&ax, 0, 0, 0, Rat(1)};
                gen_profiles(ax, 0, nmax, base, out);
                break;
            }
        }
    }

    void gen_profiles(const Axis& ax, std::size_t slot, std::int64_t nmax, Choice cur,
                      std::vector<Choice>& out) const {
        if (slot == ax.gen_counts.size()) {
            out.push_back(std::move(cur));
            return;
        }
        const auto [d, count] = ax.gen_counts[slot];
        Rat factor = 1;
        const Rat per_copy = Rat(Int(count), factorial(static_cast<int>(d)));
        for (std::int64_t m = 0; cur.n + m <= nmax; ++m) {
            if (m > 0) factor *= per_copy / Rat(m);
            Choice next = cur;
            next.n += m;
            next.sdeg += m * d;
            next.delta_excess += m * (ax.d_top - d);
            next.coeff = cur.coeff * factor;
            gen_profiles(ax, slot + 1, nmax, std::move(next), out);
        }
    }

    void descend(std::size_t axis_idx, HomologyClass sum, std::int64_t grade_sum,
                 std::int64_t sdeg_sum) {
        if (grade_sum > grade_target_ || sdeg_sum > d_target_) return;
        if (axis_idx == axes_.size()) {
            if (sum == target_ && sdeg_sum == d_target_) audit_and_add();
            return;
        }
        std::vector<Choice> options;
        profiles_for(axes_[axis_idx], grade_target_ - grade_sum, options);
        for (Choice& opt : options) {
            chosen_.push_back(opt);
            descend(axis_idx + 1, opt.n == 0 ? sum : sum + opt.n * opt.axis->cls,
                    grade_sum + opt.n * opt.axis->grade, sdeg_sum + opt.sdeg);
            chosen_.pop_back();
        }
    }

    // The double-point expansion of this decomposition, term by term:
    // delta = sum_i n_i(n_i-1)/2 A_i^2 + sum_{i<j} n_i n_j A_i.A_j
    //       + sum_i n_i delta_i. Every term must be nonnegative, the total
    //       must vanish on the degree-zero slot, and vanishing must force
    //       unit multiplicities off square zero, orthogonal parts and top
    //       point counts. Violations mean the table is outside the
    //       hypotheses of the closed form.
    void audit_and_add() {
        std::int64_t total = 0;
        for (const Choice& ch : chosen_) {
            if (ch.n == 0) continue;
            const std::int64_t t1 = ch.n * (ch.n - 1) / 2 * ch.axis->sq;
            if (t1 < 0)
                throw std::logic_error(
                    "taubes_gr0_closed: negative-square class with multiplicity > 1");
            total += t1 + ch.delta_excess;
        }
        for (std::size_t i = 0; i < chosen_.size(); ++i) {
            if (chosen_[i].n == 0) continue;
            for (std::size_t j = i + 1; j < chosen_.size(); ++j) {
                if (chosen_[j].n == 0) continue;
                const std::int64_t t2 = chosen_[i].n * chosen_[j].n *
                                        model_.intersect(chosen_[i].axis->cls,
                                                         chosen_[j].axis->cls);
                if (t2 < 0)
                    throw std::logic_error(
                        "taubes_gr0_closed: negatively intersecting parts in a decomposition");
                total += t2;
            }
        }
        if (total != 0)
            throw std::logic_error(
                "taubes_gr0_closed: double-point expansion does not vanish on the "
                "degree-zero slot");
        Rat prod = 1;
        for (const Choice& ch : chosen_) {
            if (ch.n > 1 && ch.axis->sq != 0)
                throw std::logic_error("taubes_gr0_closed: multiplicity condition violated");
            if (ch.delta_excess != 0)
                throw std::logic_error("taubes_gr0_closed: top point-count condition violated");
            prod *= ch.coeff;
        }
        slot_sum_ += prod;
    }

    const ManifoldModel& model_;
    std::vector<Axis> axes_;
    HomologyClass target_;
    std::int64_t d_target_ = 0;
    std::int64_t grade_target_ = 0;
    Rat slot_sum_;
    std::vector<Choice> chosen_;
};

}  // namespace

std::vector<HomologyClass> reachable_classes(const ManifoldModel& model, const CurveTable& table,
                                             std::int64_t torder) {
    std::vector<HomologyClass> gens;
    std::set<HomologyClass> dedup;
    auto push = [&](const HomologyClass& c) {
        if (dedup.insert(c).second) gens.push_back(c);
    };
    for (const auto& e : table.generic) push(e.cls);
    for (const auto& e : table.exceptional) push(e.cls);
    for (const auto& t : table.tori) push(t.cls);

    std::set<HomologyClass> seen;
    HomologyClass zero(std::vector<std::int64_t>(model.rank(), 0));
    auto rec = [&](auto&& self, std::size_t idx, const HomologyClass& sum,
                   std::int64_t grade_sum) -> void {
        if (idx == gens.size()) {
            seen.insert(sum);
            return;
        }
        const std::int64_t g = model.grade(gens[idx]);
        for (std::int64_t n = 0; grade_sum + n * g <= torder; ++n)
            self(self, idx + 1, n == 0 ? sum : sum + n * gens[idx], grade_sum + n * g);
    };
    rec(rec, 0, zero, 0);
    return {seen.begin(), seen.end()};
}

Int taubes_gr0_closed(const ManifoldModel& model, const CurveTable& table,
                      const HomologyClass& a) {
    Gr0Engine engine(model, table);
    return engine.gr0(a);
}

TheoremReport verify_main_theorem(const ModelPtr& model, const CurveTable& table,
                                  std::int64_t torder, std::int64_t sorder) {
    const USeries F = mobius_F(static_cast<int>(torder));
    GenFuncChoice rt_gens{one_plus_t(static_cast<int>(torder)), exp_t(static_cast<int>(torder)),
                          F, GenFuncFlavor::RuanTianF};
    GenFuncChoice gt_gens{rt_gens.e, rt_gens.g, f_from_F(F, static_cast<int>(torder)),
                          GenFuncFlavor::TaubesF};

    Series gt = build_GT(model, table, gt_gens, torder, sorder);
    Series rt = build_RT(model, table, rt_gens, torder, sorder);
    Series diff = sub(gt, rt);

    TheoremReport report{gt, rt, diff, diff.is_zero(), std::nullopt, false, "", 0, {}};
    if (!report.series_equal) report.first_diff = diff.terms().begin()->first;

    std::string reason;
    if (!gr0_admissible(*model, table, &reason)) {
        report.gr0_skip_reason = reason;
        return report;
    }
    report.gr0_checked = true;
    Gr0Engine engine(*model, table);
    for (const HomologyClass& cls : reachable_classes(*model, table, torder)) {
        // Synthetic classes of square -1 whose kappa pairing is not -1 have
        // no geometric degree-zero slot; the closed form does not apply.
        if (classify(*model, cls) == ClassKind::Exceptional && model->kappa_dot(cls) != -1)
            continue;
        const std::int64_t d = point_constraints(*model, cls);
        if (d < 0 || d > sorder) continue;
        const Int extracted = extract(gt, cls, 0);
        const Int closed = engine.gr0(cls);
        ++report.gr0_classes_checked;
        if (extracted != closed) report.gr0_mismatches.push_back({cls, extracted, closed});
    }
    return report;
}

}  // namespace grseries
