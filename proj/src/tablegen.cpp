#include "grseries/tablegen.hpp"

#include <array>
#include <random>

namespace grseries {

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    // Modulo draw: biased in general but deterministic across platforms,
    // which is what seeded test tables need.
    std::uint64_t below(std::uint64_t n) { return gen() % n; }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return below(2) == 1; }
};

ModelPtr make_model(int which, std::string& name) {
    switch (which) {
        case 0:
            name = "product-of-spheres";
            return std::make_shared<ManifoldModel>(
                2, std::vector<std::int64_t>{0, 1, 1, 0}, std::vector<std::int64_t>{-2, -2},
                std::vector<std::int64_t>{1, 1});
        case 1:
            name = "torus-bundle";
            return std::make_shared<ManifoldModel>(
                2, std::vector<std::int64_t>{0, 1, 1, 0}, std::vector<std::int64_t>{0, 0},
                std::vector<std::int64_t>{1, 1});
        case 2:
            name = "elliptic-blowup";
            return std::make_shared<ManifoldModel>(
                3, std::vector<std::int64_t>{0, 1, 0, 1, 0, 0, 0, 0, -1},
                std::vector<std::int64_t>{0, 0, -1}, std::vector<std::int64_t>{1, 1, 1});
        default:
            name = "torus-spray";
            return std::make_shared<ManifoldModel>(
                2, std::vector<std::int64_t>{0, 0, 0, 0}, std::vector<std::int64_t>{0, 0},
                std::vector<std::int64_t>{1, 1});
    }
}

void collect_candidates(const ManifoldModel& model, std::int64_t torder, std::int64_t sorder,
                        std::vector<HomologyClass>& out) {
    const int r = model.rank();
    std::vector<std::int64_t> coords(static_cast<std::size_t>(r), -2);
    while (true) {
        HomologyClass cls{coords};
        const std::int64_t g = model.grade(cls);
        if (g >= 1 && g <= torder) {
            switch (classify(model, cls)) {
                case ClassKind::Generic: {
                    if (model.self_intersect(cls) >= 0) {
                        const std::int64_t sum = model.self_intersect(cls) - model.kappa_dot(cls);
                        if (sum % 2 == 0) {
                            const std::int64_t da = sum / 2;
                            if (da >= 0 && da <= std::min<std::int64_t>(sorder, 5))
                                out.push_back(cls);
                        }
                    }
                    break;
                }
                case ClassKind::Exceptional:
                    if (model.kappa_dot(cls) == -1) out.push_back(cls);
                    break;
                case ClassKind::Toroidal:
                    out.push_back(cls);
                    break;
            }
        }
        int i = 0;
        for (; i < r; ++i) {
            if (coords[static_cast<std::size_t>(i)] < 3) {
                ++coords[static_cast<std::size_t>(i)];
                break;
            }
            coords[static_cast<std::size_t>(i)] = -2;
        }
        if (i == r) break;
    }
}

}  // namespace

GeneratedTable random_table(std::uint64_t seed, std::int64_t torder, std::int64_t sorder) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    GeneratedTable out;
    out.model = make_model(static_cast<int>(seed % 4), out.model_name);
    const ManifoldModel& model = *out.model;

    std::vector<HomologyClass> pool;
    collect_candidates(model, torder, sorder, pool);

    const std::size_t want = static_cast<std::size_t>(rng.range(2, 4));
    std::vector<HomologyClass> chosen;
    if (seed % 4 == 2) {
        // the blowup model supports all three kinds at once; start from a
        // mutually compatible triple so mixed tables are guaranteed
        chosen.push_back(HomologyClass{{0, 0, 1}});  // exceptional
        chosen.push_back(HomologyClass{{1, 0, 0}});  // toroidal ray
        chosen.push_back(HomologyClass{{1, 1, 0}});  // generic, d_A = 1
    }
    for (int attempt = 0; attempt < 64 && chosen.size() < want && !pool.empty(); ++attempt) {
        const HomologyClass& cand = pool[rng.below(pool.size())];
        bool compatible = true;
        for (const HomologyClass& c : chosen) {
            if (c == cand || model.intersect(c, cand) < 0) {
                compatible = false;
                break;
            }
        }
        if (compatible) chosen.push_back(cand);
    }

    for (const HomologyClass& cls : chosen) {
        switch (classify(model, cls)) {
            case ClassKind::Generic: {
                GenericEntry entry;
                entry.cls = cls;
                const std::int64_t da = point_constraints(model, cls);
                for (std::int64_t d = 0; d <= da; ++d) {
                    const std::int64_t gr = rng.range(-5, 5);
                    if (gr != 0) entry.counts[d] = gr;
                }
                out.table.generic.push_back(std::move(entry));
                break;
            }
            case ClassKind::Exceptional:
                out.table.exceptional.push_back({cls, rng.range(0, 1)});
                break;
            case ClassKind::Toroidal: {
                // One or two embedded tori on the ray, sometimes on a
                // proper multiple so that multiple-cover bookkeeping with
                // q > 1 gets exercised.
                const int ntori = static_cast<int>(rng.range(1, 2));
                for (int i = 0; i < ntori; ++i) {
                    std::int64_t q = rng.range(1, 2);
                    if (model.grade(q * cls) > torder) q = 1;
                    out.table.tori.push_back(TorusData::of_type(
                        q * cls, rng.coin() ? 1 : -1, static_cast<int>(rng.range(0, 3))));
                }
                break;
            }
        }
    }
    validate_table(model, out.table);
    return out;
}

}  // namespace grseries
