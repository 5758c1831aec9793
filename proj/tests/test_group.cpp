#include "orbicalc/group.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using orb::Cyclotomic;
using orb::CycMatrix;
using orb::FiniteMatrixGroup;
using orb::Rational;
using orbtest::mat;
using orbtest::perm_mat;

namespace {

FiniteMatrixGroup s3_perm() {
    return FiniteMatrixGroup::generate(
        1, 3, {perm_mat(1, {1, 0, 2}), perm_mat(1, {1, 2, 0})});
}

FiniteMatrixGroup q8() {
    // i and j of the 2-dimensional quaternion representation over Q(zeta_4)
    CycMatrix mi = mat(4, {{"z", "0"}, {"0", "-z"}});
    CycMatrix mj = mat(4, {{"0", "1"}, {"-1", "0"}});
    return FiniteMatrixGroup::generate(4, 2, {mi, mj});
}

}  // namespace

TEST_CASE("cyclic group of order 3 from one diagonal generator") {
    auto g = FiniteMatrixGroup::generate(3, 2, {mat(3, {{"z", "0"}, {"0", "z^2"}})});
    CHECK(g.size() == 3);
    CHECK(g.element_order(0) == 1);
    CHECK(g.is_abelian());
}

TEST_CASE("swap matrix generates order 2") {
    auto g = FiniteMatrixGroup::generate(1, 2, {perm_mat(1, {1, 0})});
    CHECK(g.size() == 2);
    CHECK(g.element_order(1) == 2);
}

TEST_CASE("cap exceeded reports an error") {
    CHECK_THROWS_AS(FiniteMatrixGroup::generate(5, 1, {mat(5, {{"z"}})}, 4),
                    orb::InputError);
    CHECK_THROWS_WITH(FiniteMatrixGroup::generate(5, 1, {mat(5, {{"z"}})}, 4),
                      Catch::Matchers::ContainsSubstring("cap"));
}

TEST_CASE("non-invertible generator is rejected") {
    CHECK_THROWS_AS(FiniteMatrixGroup::generate(1, 2, {mat(1, {{"1", "0"}, {"0", "0"}})}),
                    orb::InputError);
}

TEST_CASE("conjugacy classes of S3") {
    auto g = s3_perm();
    REQUIRE(g.size() == 6);
    const auto& classes = g.conjugacy_classes();
    REQUIRE(classes.size() == 3);
    std::multiset<long> cents;
    long total = 0;
    for (const auto& c : classes) {
        cents.insert(c.centralizer_order);
        total += static_cast<long>(c.members.size());
        CHECK(g.size() % static_cast<long>(c.members.size()) == 0);
    }
    CHECK(cents == std::multiset<long>{6, 2, 3});
    CHECK(total == 6);
}

TEST_CASE("trivial group has one class") {
    auto g = FiniteMatrixGroup::generate(1, 2, {});
    CHECK(g.size() == 1);
    CHECK(g.conjugacy_classes().size() == 1);
    CHECK(g.conjugacy_classes()[0].centralizer_order == 1);
}

TEST_CASE("conjugacy classes of Q8") {
    auto g = q8();
    REQUIRE(g.size() == 8);
    const auto& classes = g.conjugacy_classes();
    REQUIRE(classes.size() == 5);
    std::multiset<long> cents;
    for (const auto& c : classes) cents.insert(c.centralizer_order);
    CHECK(cents == std::multiset<long>{8, 8, 4, 4, 4});
}

TEST_CASE("commuting pairs of Z2 split into four singleton classes") {
    auto g = FiniteMatrixGroup::generate(2, 2, {mat(2, {{"-1", "0"}, {"0", "-1"}})});
    const auto& pcs = g.commuting_pair_classes();
    REQUIRE(pcs.size() == 4);
    for (const auto& pc : pcs) {
        CHECK(pc.orbit_size == 1);
        CHECK(pc.stabilizer_order == 2);
    }
}

TEST_CASE("commuting pair classes of S3") {
    auto g = s3_perm();
    CHECK(g.commuting_pair_count() == 18);
    const auto& pcs = g.commuting_pair_classes();
    CHECK(pcs.size() == 8);
    long covered = 0;
    for (const auto& pc : pcs) {
        covered += pc.orbit_size;
        CHECK(pc.orbit_size * pc.stabilizer_order == g.size());
    }
    CHECK(covered == 18);
}

TEST_CASE("Burnside count: commuting pairs equal order times class number") {
    auto check = [](const FiniteMatrixGroup& g) {
        long classes = static_cast<long>(g.conjugacy_classes().size());
        CHECK(g.commuting_pair_count() == g.size() * classes);
        long covered = 0;
        for (const auto& pc : g.commuting_pair_classes()) covered += pc.orbit_size;
        CHECK(covered == g.commuting_pair_count());
    };
    check(s3_perm());
    check(q8());
    check(FiniteMatrixGroup::generate(6, 1, {mat(6, {{"z"}})}));
}

TEST_CASE("sum of reciprocal centralizer orders is 1") {
    auto check = [](const FiniteMatrixGroup& g) {
        Rational sum(0);
        for (const auto& c : g.conjugacy_classes())
            sum += Rational(1, c.centralizer_order);
        CHECK(sum == 1);
    };
    check(s3_perm());
    check(q8());
    for (long n = 1; n <= 12; ++n) {
        std::vector<CycMatrix> gens;
        if (n > 1) gens.push_back(mat(n, {{"z"}}));
        check(FiniteMatrixGroup::generate(n, 1, gens));
    }
}

TEST_CASE("centralizer of the identity is the whole group") {
    auto g = s3_perm();
    CHECK(g.centralizer(0).size() == 6);
    // centralizers are subgroups containing the element
    for (int e = 0; e < g.size(); ++e) {
        auto c = g.centralizer(e);
        CHECK(std::find(c.begin(), c.end(), e) != c.end());
        CHECK(g.size() % static_cast<long>(c.size()) == 0);
        for (int a : c)
            for (int b : c) {
                int ab = g.mul(a, b);
                CHECK(std::find(c.begin(), c.end(), ab) != c.end());
            }
    }
}

TEST_CASE("element orders and determinants") {
    auto g = FiniteMatrixGroup::generate(6, 2, {mat(6, {{"z", "0"}, {"0", "z^5"}})});
    int gen = -1;
    for (int e = 0; e < g.size(); ++e)
        if (g.element(e) == mat(6, {{"z", "0"}, {"0", "z^5"}})) gen = e;
    REQUIRE(gen >= 0);
    CHECK(g.element_order(gen) == 6);
    CHECK(g.determinant(gen) == Cyclotomic::one(6));

    auto z3 = FiniteMatrixGroup::generate(
        3, 3, {mat(3, {{"z", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z"}})});
    CHECK(z3.determinant(1) == Cyclotomic::one(3));
}

TEST_CASE("closure is independent of generator order") {
    CycMatrix a = perm_mat(1, {1, 0, 2});
    CycMatrix b = perm_mat(1, {1, 2, 0});
    auto g1 = FiniteMatrixGroup::generate(1, 3, {a, b});
    auto g2 = FiniteMatrixGroup::generate(1, 3, {b, a});
    REQUIRE(g1.size() == g2.size());
    for (int e = 0; e < g1.size(); ++e)
        CHECK(g2.index_of(g1.element(e)).has_value());
}

TEST_CASE("inverses and words are consistent") {
    auto g = q8();
    CycMatrix mi = mat(4, {{"z", "0"}, {"0", "-z"}});
    CycMatrix mj = mat(4, {{"0", "1"}, {"-1", "0"}});
    for (int e = 0; e < g.size(); ++e) {
        CHECK(g.mul(e, g.inv(e)) == 0);
        // the stored word reproduces the element
        CycMatrix acc = CycMatrix::identity(4, 2);
        for (int w : g.word(e)) acc = acc * (w == 0 ? mi : mj);
        CHECK(acc == g.element(e));
    }
}
