#include "orbicalc/sectors.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using orb::ModelKind;
using orb::QuotientModel;
using orb::Rational;
using orb::Sector;
using orbtest::mat;

namespace {

QuotientModel p2_z3() {
    return QuotientModel::projective(
        3, 3, {mat(3, {{"1", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z^2"}})});
}

}  // namespace

TEST_CASE("trivial group on P2 has one inertia sector") {
    auto m = QuotientModel::projective(1, 3, {});
    auto sectors = orb::inertia_sectors(m);
    REQUIRE(sectors.size() == 1);
    CHECK(sectors[0].component.dim == 2);
    CHECK(sectors[0].component.age == 0);
    CHECK(sectors[0].stabilizer_order == 1);
    CHECK(sectors[0].euler == 3);
}

TEST_CASE("inertia sectors of [P2/Z3]") {
    auto sectors = orb::inertia_sectors(p2_z3());
    REQUIRE(sectors.size() == 7);
    int dim2 = 0, points = 0;
    for (const auto& s : sectors) {
        CHECK(s.stabilizer_order == 3);
        if (s.component.dim == 2) {
            ++dim2;
            CHECK(s.component.age == 0);
        } else {
            ++points;
            CHECK(s.component.dim == 0);
            CHECK(s.component.age == 1);
        }
    }
    CHECK(dim2 == 1);
    CHECK(points == 6);
}

TEST_CASE("inertia sectors of [C2/Z2]") {
    auto m = QuotientModel::affine(2, 2, {mat(2, {{"-1", "0"}, {"0", "-1"}})});
    auto sectors = orb::inertia_sectors(m);
    REQUIRE(sectors.size() == 2);
    CHECK(sectors[0].component.dim == 2);
    CHECK(sectors[0].component.age == 0);
    CHECK(sectors[1].component.dim == 0);
    CHECK(sectors[1].component.age == 1);
    for (const auto& s : sectors) CHECK(s.stabilizer_order == 2);
}

TEST_CASE("double inertia sectors of Z2 acting on C2 by the sign") {
    auto m = QuotientModel::affine(2, 2, {mat(2, {{"-1", "0"}, {"0", "-1"}})});
    auto sectors = orb::double_inertia_sectors(m);
    REQUIRE(sectors.size() == 4);
    int dim2 = 0, dim0 = 0;
    for (const auto& s : sectors) {
        CHECK(s.stabilizer_order == 2);
        (s.component.dim == 2 ? dim2 : dim0) += 1;
    }
    CHECK(dim2 == 1);
    CHECK(dim0 == 3);
}

TEST_CASE("double inertia sectors of [P2/Z3] number 25") {
    auto sectors = orb::double_inertia_sectors(p2_z3());
    REQUIRE(sectors.size() == 25);
    int dim2 = 0, points = 0;
    for (const auto& s : sectors) {
        CHECK(s.stabilizer_order == 3);
        (s.component.dim == 2 ? dim2 : points) += 1;
    }
    CHECK(dim2 == 1);
    CHECK(points == 24);
}

TEST_CASE("double inertia of the trivial group is the whole space") {
    auto m = QuotientModel::projective(1, 4, {});
    auto sectors = orb::double_inertia_sectors(m);
    REQUIRE(sectors.size() == 1);
    CHECK(sectors[0].component.dim == 3);
}

TEST_CASE("sector Euler characteristic equals E at one") {
    auto rng = orbtest::make_rng(31337);
    for (int trial = 0; trial < 4; ++trial) {
        auto kind = trial % 2 == 0 ? ModelKind::Affine : ModelKind::Projective;
        auto m = orbtest::random_diagonal_model(rng, kind);
        for (const auto& s : orb::inertia_sectors(m))
            CHECK(s.euler == s.e_poly.eval_at_one());
        for (const auto& s : orb::double_inertia_sectors(m))
            CHECK(s.euler == s.e_poly.eval_at_one());
    }
}

TEST_CASE("pairs with the identity reproduce single inertia data") {
    auto m = p2_z3();
    auto singles = orb::inertia_sectors(m);
    auto doubles = orb::double_inertia_sectors(m);

    // collect (dim, stabilizer) multisets; the (g, e) pair classes must
    // reproduce the single-inertia component data exactly
    std::multiset<std::pair<long, long>> single_data, pair_with_e;
    for (const auto& s : singles) single_data.insert({s.component.dim, s.stabilizer_order});
    for (const auto& s : doubles)
        if (s.rep_h == 0) pair_with_e.insert({s.component.dim, s.stabilizer_order});
    CHECK(single_data == pair_with_e);
}

TEST_CASE("abelian projective sector count is the sum of eigenvalue counts") {
    auto rng = orbtest::make_rng(7771);
    for (int trial = 0; trial < 4; ++trial) {
        auto m = orbtest::random_diagonal_model(rng, ModelKind::Projective);
        REQUIRE(m.group().is_abelian());
        long expected = 0;
        for (int g = 0; g < m.group().size(); ++g)
            expected += static_cast<long>(m.eigen(g).entries.size());
        CHECK(static_cast<long>(orb::inertia_sectors(m).size()) == expected);
    }
}

TEST_CASE("sectors are emitted in deterministic order") {
    auto a = orb::inertia_sectors(p2_z3());
    auto b = orb::inertia_sectors(p2_z3());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].class_id == b[i].class_id);
        CHECK(a[i].component.exponents == b[i].component.exponents);
        CHECK(a[i].class_id >= (i == 0 ? 0 : a[i - 1].class_id));
    }
}
