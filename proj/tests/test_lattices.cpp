#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "grseries/genfuncs.hpp"
#include "grseries/lattices.hpp"
#include "grseries/numtheory.hpp"
#include "oracles.hpp"

using namespace grseries;

namespace {
const HomologyClass torus_cls{{1, 0}};
}

TEST_CASE("sublattice enumeration") {
    const auto one = enumerate_sublattices(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == SublatticeHNF{1, 1, 0});

    auto two = enumerate_sublattices(2);
    REQUIRE(two.size() == 3);
    CHECK(std::count(two.begin(), two.end(), SublatticeHNF{1, 2, 0}) == 1);
    CHECK(std::count(two.begin(), two.end(), SublatticeHNF{2, 1, 0}) == 1);
    CHECK(std::count(two.begin(), two.end(), SublatticeHNF{2, 1, 1}) == 1);

    CHECK(enumerate_sublattices(12).size() == 28);  // sigma(12)
    for (std::int64_t m = 1; m <= 60; ++m)
        CHECK(enumerate_sublattices(m).size() ==
              static_cast<std::size_t>(oracles::sigma_literal(m)));
    CHECK_THROWS_AS(enumerate_sublattices(0), std::domain_error);
}

TEST_CASE("containment predicates match the generic membership oracle") {
    CHECK(containments({1, 2, 0}) == std::array<bool, 3>{true, false, false});
    CHECK(containments({2, 2, 0}) == std::array<bool, 3>{true, true, true});
    CHECK(containments({3, 1, 0}) == std::array<bool, 3>{false, false, false});
    for (std::int64_t m = 1; m <= 40; ++m)
        for (const SublatticeHNF& lat : enumerate_sublattices(m))
            CHECK(containments(lat) ==
                  oracles::containments_by_membership(lat.a, lat.b, lat.p));
}

TEST_CASE("census values and closed forms") {
    const LatticeCensus c1 = census(1);
    CHECK(c1.count_none == 1);
    CHECK(c1.count_single == 0);
    CHECK(c1.count_all == 0);

    const LatticeCensus c2 = census(2);
    CHECK(c2.count_none == 0);
    CHECK(c2.count_single == 1);
    CHECK(c2.count_all == 0);

    const LatticeCensus c4 = census(4);
    CHECK(c4.count_none == 0);
    CHECK(c4.count_single == 2);
    CHECK(c4.count_all == 1);

    // census() itself asserts the three divisor-sum identities
    for (std::int64_t m = 1; m <= 200; ++m) CHECK_NOTHROW(census(m));
}

TEST_CASE("torus data") {
    CHECK(TorusData::of_type(torus_cls, 1, 2).type() == 2);
    CHECK(TorusData(torus_cls, -1, {1, -1, 1}).type() == 1);
    CHECK_THROWS_AS(TorusData(torus_cls, 0, {1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(TorusData(torus_cls, 1, {1, 2, 1}), std::domain_error);
    CHECK_THROWS_AS(TorusData::of_type(torus_cls, 1, 4), std::domain_error);
}

TEST_CASE("sign of a sublattice") {
    const TorusData torus(torus_cls, 1, {-1, 1, 1});
    CHECK(sgn_lambda({1, 1, 0}, torus) == 1);
    CHECK(sgn_lambda({1, 2, 0}, torus) == -1);
    CHECK(sgn_lambda({2, 2, 0}, torus) == -1);
}

TEST_CASE("signed sums") {
    const TorusData type0(torus_cls, 1, {1, 1, 1});
    CHECK(signed_sum(1, type0) == 1);
    CHECK(signed_sum(2, type0) == 3);
    const TorusData type1 = TorusData::of_type(torus_cls, 1, 1);
    CHECK(signed_sum(2, type1) == 1);

    // brute force agrees with the closed form internally for every
    // combination; permuting which D_i carry the minus signs changes nothing
    for (std::int64_t m = 1; m <= 64; ++m) {
        for (int d0 : {1, -1}) {
            for (int type = 0; type <= 3; ++type)
                CHECK_NOTHROW(signed_sum(m, TorusData::of_type(torus_cls, d0, type)));
            CHECK(signed_sum(m, TorusData(torus_cls, d0, {-1, 1, 1})) ==
                  signed_sum(m, TorusData(torus_cls, d0, {1, 1, -1})));
            CHECK(signed_sum(m, TorusData(torus_cls, d0, {-1, -1, 1})) ==
                  signed_sum(m, TorusData(torus_cls, d0, {1, -1, -1})));
        }
    }
}

TEST_CASE("twist sign parameters by type") {
    const std::pair<int, int> expected[4] = {{0, 0}, {-2, 0}, {-4, 4}, {-6, 4}};
    for (int type = 0; type <= 3; ++type)
        CHECK(twist_sign_params(TorusData::of_type(torus_cls, 1, type)) == expected[type]);
}

TEST_CASE("phi from the lattice product") {
    const USeries F = mobius_F(16);
    CHECK(phi_lattice(TorusData::of_type(torus_cls, 1, 0), F, 16) == geometric(16));
    CHECK(phi_lattice(TorusData::of_type(torus_cls, 1, 1), F, 16) == one_plus_t(16));

    const USeries neg = phi_lattice(TorusData::of_type(torus_cls, -1, 0), F, 16);
    USeries one_minus_t = USeries::unit(16);
    one_minus_t.set(1, -1);
    CHECK(neg == one_minus_t);
}

TEST_CASE("phi closed form reproduces the wall-crossing family") {
    const auto fam = wall_crossing_family(geometric(16));
    for (int type = 0; type <= 3; ++type)
        CHECK(phi_closed(TorusData::of_type(torus_cls, 1, type), geometric(16), 16) ==
              fam[static_cast<std::size_t>(type)]);
}

TEST_CASE("lattice product equals closed form for all sign combinations") {
    const USeries F = mobius_F(16);
    const USeries f = f_from_F(F, 16);
    for (int d0 : {1, -1})
        for (int type = 0; type <= 3; ++type) {
            const TorusData torus = TorusData::of_type(torus_cls, d0, type);
            CHECK(phi_lattice(torus, F, 16) == phi_closed(torus, f, 16));
        }
}
