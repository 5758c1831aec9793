#include "orbicalc/model.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using orb::Cyclotomic;
using orb::CycMatrix;
using orb::ModelKind;
using orb::QuotientModel;
using orb::Rational;
using orbtest::mat;

namespace {

QuotientModel c3_z3_111() {
    return QuotientModel::affine(
        3, 3, {mat(3, {{"z", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z"}})});
}

QuotientModel p2_z3() {
    return QuotientModel::projective(
        3, 3, {mat(3, {{"1", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z^2"}})});
}

QuotientModel c2_z2() {
    return QuotientModel::affine(2, 2, {mat(2, {{"-1", "0"}, {"0", "-1"}})});
}

QuotientModel p1_z2() {
    return QuotientModel::projective(2, 2, {mat(2, {{"1", "0"}, {"0", "-1"}})});
}

int find_element(const QuotientModel& m, const CycMatrix& x) {
    auto id = m.group().index_of(x);
    REQUIRE(id.has_value());
    return *id;
}

}  // namespace

TEST_CASE("eigen decomposition of diagonal elements") {
    auto m = c3_z3_111();
    int g = find_element(m, mat(3, {{"z", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z"}}));
    const auto& d = m.eigen(g);
    CHECK(d.order == 3);
    REQUIRE(d.entries.size() == 1);
    CHECK(d.entries[0].exponent == 1);
    CHECK(d.entries[0].multiplicity == 3);

    const auto& id_data = m.eigen(0);
    REQUIRE(id_data.entries.size() == 1);
    CHECK(id_data.entries[0].exponent == 0);
    CHECK(id_data.entries[0].multiplicity == 3);

    auto p = p2_z3();
    int h = find_element(p, mat(3, {{"1", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z^2"}}));
    const auto& dh = p.eigen(h);
    REQUIRE(dh.entries.size() == 3);
    for (long k = 0; k < 3; ++k) {
        CHECK(dh.entries[k].exponent == k);
        CHECK(dh.entries[k].multiplicity == 1);
    }
}

TEST_CASE("eigen decomposition matches diagonal entries for abelian actions") {
    auto rng = orbtest::make_rng(5003);
    for (int trial = 0; trial < 5; ++trial) {
        auto m = orbtest::random_diagonal_model(rng, ModelKind::Affine);
        for (int g = 0; g < m.group().size(); ++g) {
            const auto& mg = m.group().element(g);
            long order = m.group().element_order(g);
            const auto& d = m.eigen(g);
            long torsion = orb::cyc_field(m.conductor()).torsion_order;
            for (long i = 0; i < m.ambient_dim(); ++i) {
                auto lg = mg.at(i, i).torsion_log();
                REQUIRE(lg.has_value());
                // diagonal entry zeta^(lg) = zeta_order^a with a = lg*order/torsion
                long a = (*lg * order) / torsion;
                bool found = false;
                for (const auto& e : d.entries)
                    if (e.exponent == a) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("affine ages") {
    auto m = c3_z3_111();
    int g = find_element(m, mat(3, {{"z", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z"}}));
    CHECK(m.age_affine(g) == 1);
    CHECK(m.age_affine(0) == 0);

    auto z2 = c2_z2();
    CHECK(z2.age_affine(1) == 1);

    auto refl = QuotientModel::affine(2, 2, {mat(2, {{"1", "0"}, {"0", "-1"}})});
    CHECK(refl.age_affine(1) == Rational(1, 2));
}

TEST_CASE("projective components and their ages") {
    auto triv = QuotientModel::projective(1, 3, {});
    auto comps = triv.projective_components(0);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].dim == 2);
    CHECK(comps[0].age == 0);

    auto p = p2_z3();
    int g = find_element(p, mat(3, {{"1", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z^2"}}));
    auto pc = p.projective_components(g);
    REQUIRE(pc.size() == 3);
    for (const auto& c : pc) {
        CHECK(c.dim == 0);
        CHECK(c.age == 1);
    }

    auto q = p1_z2();
    auto qc = q.projective_components(1);
    REQUIRE(qc.size() == 2);
    for (const auto& c : qc) {
        CHECK(c.dim == 0);
        CHECK(c.age == Rational(1, 2));
    }
}

TEST_CASE("sum of component dimensions plus one is the ambient dimension") {
    auto rng = orbtest::make_rng(7207);
    for (int trial = 0; trial < 5; ++trial) {
        auto m = orbtest::random_diagonal_model(rng, ModelKind::Projective);
        for (const auto& cls : m.group().conjugacy_classes()) {
            long total = 0;
            for (const auto& c : m.projective_components(cls.representative))
                total += c.dim + 1;
            CHECK(total == m.ambient_dim());
        }
    }
}

TEST_CASE("double fixed loci") {
    auto p = p2_z3();
    auto whole = p.double_fixed(0, 0);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].dim == 2);

    int g = find_element(p, mat(3, {{"1", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z^2"}}));
    auto gg = p.double_fixed(g, g);
    CHECK(gg.size() == 3);
    for (const auto& c : gg) CHECK(c.dim == 0);

    int g2 = p.group().mul(g, g);
    auto g_g2 = p.double_fixed(g, g2);
    CHECK(g_g2.size() == 3);
    for (const auto& c : g_g2) CHECK(c.dim == 0);

    auto a = c2_z2();
    auto pair = a.double_fixed(1, 1);
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].dim == 0);
    auto ee = a.double_fixed(0, 0);
    REQUIRE(ee.size() == 1);
    CHECK(ee[0].dim == 2);
}

TEST_CASE("double fixed restricted to (g, e) matches single fixed data") {
    auto p = p2_z3();
    for (const auto& cls : p.group().conjugacy_classes()) {
        int g = cls.representative;
        auto single = p.projective_components(g);
        auto pair = p.double_fixed(g, 0);
        REQUIRE(single.size() == pair.size());
        for (std::size_t i = 0; i < single.size(); ++i)
            CHECK(single[i].dim == pair[i].dim);
    }
}

TEST_CASE("non-commuting pair is rejected") {
    auto s3 = QuotientModel::affine(
        3, 3, {orbtest::perm_mat(3, {1, 0, 2}), orbtest::perm_mat(3, {1, 2, 0})});
    int t = -1, r = -1;
    for (int e = 1; e < s3.group().size(); ++e) {
        if (s3.group().element_order(e) == 2 && t < 0) t = e;
        if (s3.group().element_order(e) == 3 && r < 0) r = e;
    }
    REQUIRE((t >= 0 && r >= 0));
    CHECK_THROWS_AS(s3.double_fixed(t, r), orb::InputError);
}

TEST_CASE("Gorenstein checks") {
    CHECK(c3_z3_111().gorenstein_check().ok);
    CHECK(QuotientModel::projective(1, 2, {}).gorenstein_check().ok);

    auto g = p1_z2().gorenstein_check();
    CHECK_FALSE(g.ok);
    CHECK(g.certificate.find("1/2") != std::string::npos);

    auto refl = QuotientModel::affine(2, 2, {mat(2, {{"1", "0"}, {"0", "-1"}})});
    auto gr = refl.gorenstein_check();
    CHECK_FALSE(gr.ok);
    REQUIRE(gr.determinants_one.has_value());
    CHECK_FALSE(*gr.determinants_one);
}

TEST_CASE("K-equivalence checks") {
    auto refl = QuotientModel::affine(2, 2, {mat(2, {{"1", "0"}, {"0", "-1"}})});
    CHECK_FALSE(refl.k_equivalence_check().ok);

    CHECK(p2_z3().k_equivalence_check().ok);
    CHECK(c2_z2().k_equivalence_check().ok);

    // a point of P^1 is a divisor, so the involution fails the check
    CHECK_FALSE(p1_z2().k_equivalence_check().ok);
}

TEST_CASE("age duality and Gorenstein-determinant agreement on random models") {
    auto rng = orbtest::make_rng(9011);
    int elements_checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        auto m = orbtest::random_diagonal_model(rng, ModelKind::Affine);
        const auto& g = m.group();
        for (int e = 1; e < g.size(); ++e) {
            CHECK(m.age_affine(e) + m.age_affine(g.inv(e)) ==
                  Rational(m.ambient_dim() - m.fixed_dim_affine(e)));
            ++elements_checked;
        }
        CHECK(m.age_affine(0) == 0);
        auto gor = m.gorenstein_check();
        REQUIRE(gor.determinants_one.has_value());
        CHECK(gor.ages_integral == *gor.determinants_one);
    }
    CHECK(elements_checked > 30);
}

TEST_CASE("projective age duality per matching component") {
    auto rng = orbtest::make_rng(9013);
    for (int trial = 0; trial < 8; ++trial) {
        auto m = orbtest::random_diagonal_model(rng, ModelKind::Projective);
        const auto& grp = m.group();
        for (int e = 0; e < grp.size(); ++e) {
            int einv = grp.inv(e);
            long order = grp.element_order(e);
            auto ce = m.projective_components(e);
            auto ci = m.projective_components(einv);
            for (const auto& c : ce) {
                long matching = (order - c.exponents[0]) % order;
                bool found = false;
                for (const auto& d : ci) {
                    if (d.exponents[0] != matching) continue;
                    found = true;
                    CHECK(d.dim == c.dim);
                    // codim of the component inside P(V)
                    CHECK(c.age + d.age == Rational(m.stack_dim() - c.dim));
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("model construction errors") {
    // order-4 element over Q(zeta_3): the field lacks its eigenvalues
    CHECK_THROWS_WITH(
        QuotientModel::affine(3, 2, {mat(3, {{"0", "-1"}, {"1", "0"}})}),
        Catch::Matchers::ContainsSubstring("root_order"));

    // nontrivial scalar in a projective model
    CHECK_THROWS_WITH(
        QuotientModel::projective(4, 2, {mat(4, {{"z", "0"}, {"0", "z"}})}),
        Catch::Matchers::ContainsSubstring("scalar"));

    // affine models accept scalars fine
    CHECK_NOTHROW(QuotientModel::affine(4, 2, {mat(4, {{"z", "0"}, {"0", "z"}})}));
}

TEST_CASE("projective operations reject affine models") {
    auto m = c2_z2();
    CHECK_THROWS_AS(m.projective_components(0), orb::PreconditionError);
}
