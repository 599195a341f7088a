#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grseries/homology.hpp"

using namespace grseries;

namespace {

// rank 2, form diag(2,-1), kappa = (0,1)
ModelPtr sample_model() {
    return std::make_shared<ManifoldModel>(2, std::vector<std::int64_t>{2, 0, 0, -1},
                                           std::vector<std::int64_t>{0, 1},
                                           std::vector<std::int64_t>{1, 1});
}

const HomologyClass e1{{1, 0}};
const HomologyClass e2{{0, 1}};

}  // namespace

TEST_CASE("model validation") {
    CHECK_THROWS_AS(ManifoldModel(2, {1, 2, 3, 4}, {0, 0}, {1, 1}), std::domain_error);
    CHECK_THROWS_AS(ManifoldModel(2, {1, 0, 0}, {0, 0}, {1, 1}), std::domain_error);
    CHECK_THROWS_AS(ManifoldModel(2, {1, 0, 0, 1}, {0}, {1, 1}), std::domain_error);
    CHECK_THROWS_AS(ManifoldModel(0, {}, {}, {}), std::domain_error);
}

TEST_CASE("intersection pairing") {
    auto m = sample_model();
    CHECK(m->intersect(e1, e1) == 2);
    CHECK(m->intersect(e1, e2) == 0);
    CHECK(m->intersect(e2, e2) == -1);
    CHECK(m->intersect(e2, e1) == m->intersect(e1, e2));
    CHECK_THROWS_AS(m->intersect(e1, HomologyClass{{1, 2, 3}}), std::domain_error);
}

TEST_CASE("point constraints d_A") {
    auto m = sample_model();
    CHECK(point_constraints(*m, e1) == 1);
    CHECK(point_constraints(*m, 2 * e1) == 4);
    // exceptional classes carry d_A = 0 regardless of the formula value
    CHECK(classify(*m, e2) == ClassKind::Exceptional);
    CHECK(point_constraints(*m, e2) == 0);
    // parity violation: A.A - kappa.A odd
    ManifoldModel odd(1, {1}, {0}, {1});
    CHECK_THROWS_AS(point_constraints(odd, HomologyClass{{1}}), std::domain_error);
}

TEST_CASE("taubes genus g_A") {
    auto m = sample_model();
    CHECK(taubes_genus(*m, e1) == 2);
    // an exceptional sphere pairs to -1 with kappa and has genus zero
    ManifoldModel blowup(2, {2, 0, 0, -1}, {0, -1}, {1, 1});
    CHECK(classify(blowup, e2) == ClassKind::Exceptional);
    CHECK(taubes_genus(blowup, e2) == 0);
    CHECK(point_constraints(blowup, e2) == 0);
    ManifoldModel torus_model(2, {0, 1, 1, 0}, {0, 0}, {1, 1});
    CHECK(classify(torus_model, e1) == ClassKind::Toroidal);
    CHECK(taubes_genus(torus_model, e1) == 1);
}

TEST_CASE("double points delta") {
    auto m = sample_model();
    CHECK(double_points(*m, e1, 1) == 0);
    CHECK(double_points(*m, e1, 0) == 1);
    CHECK(double_points(*m, 2 * e1, 2) == 2);
    CHECK_THROWS_AS(double_points(*m, e1, 2), std::domain_error);
    CHECK_THROWS_AS(double_points(*m, e1, -1), std::domain_error);
}

TEST_CASE("classification partitions the lattice") {
    auto m = sample_model();
    CHECK(classify(*m, e2) == ClassKind::Exceptional);
    CHECK(classify(*m, e1) == ClassKind::Generic);
    ManifoldModel torus_model(2, {0, 1, 1, 0}, {0, 0}, {1, 1});
    CHECK(classify(torus_model, e1) == ClassKind::Toroidal);

    // d_A + g_A = 1 + A.A whenever the formula applies
    for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
            HomologyClass cls{{a, b}};
            if (classify(*m, cls) != ClassKind::Generic) continue;
            const std::int64_t sq = m->self_intersect(cls);
            if ((sq + m->kappa_dot(cls)) % 2 != 0) continue;
            CHECK(point_constraints(*m, cls) + taubes_genus(*m, cls) == 1 + sq);
        }
    }
}

TEST_CASE("primitivity and content") {
    CHECK(is_primitive(HomologyClass{{1, 2}}));
    CHECK(!is_primitive(HomologyClass{{2, 4}}));
    CHECK(content(HomologyClass{{2, 4}}) == 2);
    CHECK(primitive_root(HomologyClass{{2, 4}}) == HomologyClass{{1, 2}});
    CHECK(content(HomologyClass{{0, 0}}) == 0);
    CHECK_THROWS_AS(primitive_root(HomologyClass{{0, 0}}), std::domain_error);
}
