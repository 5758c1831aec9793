#include "orbicalc/cyclotomic.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>

using orb::Cyclotomic;
using orb::InputError;
using orb::Rational;

TEST_CASE("powers of zeta_4") {
    Cyclotomic i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(4, Rational(-1)));
    CHECK(i * i * i * i == Cyclotomic::one(4));
}

TEST_CASE("1 + zeta_3 times 1 + zeta_3^2 is 1") {
    Cyclotomic a = Cyclotomic::one(3) + Cyclotomic::zeta(3);
    Cyclotomic b = Cyclotomic::one(3) + Cyclotomic::zeta(3, 2);
    CHECK(a * b == Cyclotomic::one(3));
}

TEST_CASE("additive identity") {
    auto rng = orbtest::make_rng(11);
    for (long n : {1L, 2L, 5L, 12L}) {
        Cyclotomic a = orbtest::random_cyclotomic(rng, n);
        CHECK(a + Cyclotomic::zero(n) == a);
    }
}

TEST_CASE("conductor mismatch is rejected") {
    CHECK_THROWS_AS(Cyclotomic::zeta(3) + Cyclotomic::zeta(4), InputError);
}

TEST_CASE("inverses") {
    CHECK(Cyclotomic(7, Rational(2)).inverse() == Cyclotomic(7, Rational(1, 2)));
    for (long n : {3L, 4L, 8L, 12L})
        CHECK(Cyclotomic::zeta(n).inverse() == Cyclotomic::zeta(n, n - 1));

    // the multiply-back oracle pins the closed form
    Cyclotomic a = Cyclotomic::one(3) + Cyclotomic::zeta(3);
    Cyclotomic expected = Cyclotomic::one(3) + Cyclotomic::zeta(3, 2);
    CHECK(a * expected == Cyclotomic::one(3));
    CHECK(a.inverse() == expected);

    CHECK_THROWS_AS(Cyclotomic::zero(5).inverse(), InputError);
}

TEST_CASE("root_of_unity_log") {
    CHECK(Cyclotomic(4, Rational(-1)).root_of_unity_log() == 2);
    CHECK(Cyclotomic::one(9).root_of_unity_log() == 0);

    Cyclotomic a = Cyclotomic::one(3) + Cyclotomic::zeta(3);
    // oracle: a^3 != 1, so a is no cube root of unity
    CHECK(a * a * a != Cyclotomic::one(3));
    CHECK_FALSE(a.root_of_unity_log().has_value());

    for (long n : {1L, 2L, 6L, 10L})
        for (long k = 0; k < n; ++k)
            CHECK(Cyclotomic::zeta(n, k).root_of_unity_log() == k);
}

TEST_CASE("torsion group of the field has order lcm(2, N)") {
    // -1 lies in every cyclotomic field, even for odd N
    CHECK(Cyclotomic::root_of_unity(3, 2, 1) == Cyclotomic(3, Rational(-1)));
    CHECK(Cyclotomic::root_of_unity(1, 2, 1) == Cyclotomic(1, Rational(-1)));
    CHECK(Cyclotomic::root_of_unity(9, 6, 3) == Cyclotomic(9, Rational(-1)));
    // zeta_6 inside Q(zeta_3): order of zeta_3 times -1
    Cyclotomic z6 = Cyclotomic::root_of_unity(3, 6, 1);
    Cyclotomic acc = Cyclotomic::one(3);
    for (int k = 1; k <= 6; ++k) {
        acc *= z6;
        CHECK((acc == Cyclotomic::one(3)) == (k == 6));
    }
    CHECK(z6 * z6 == Cyclotomic::zeta(3));
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(4, 3, 1), InputError);
}

TEST_CASE("field axioms on random elements") {
    auto rng = orbtest::make_rng(23);
    for (long n : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 15L, 24L}) {
        for (int trial = 0; trial < 8; ++trial) {
            Cyclotomic a = orbtest::random_cyclotomic(rng, n);
            Cyclotomic b = orbtest::random_cyclotomic(rng, n);
            Cyclotomic c = orbtest::random_cyclotomic(rng, n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::one(n));
        }
    }
}

TEST_CASE("zeta to the N is 1 and Phi_N vanishes") {
    for (long n : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L, 12L, 16L, 18L, 24L}) {
        Cyclotomic z = Cyclotomic::zeta(n);
        Cyclotomic p = Cyclotomic::one(n);
        for (long k = 0; k < n; ++k) p *= z;
        CHECK(p == Cyclotomic::one(n));

        const auto& f = orb::cyc_field(n);
        Cyclotomic phi_at_z(n);
        Cyclotomic zp = Cyclotomic::one(n);
        for (std::size_t j = 0; j < f.cyclo.size(); ++j) {
            phi_at_z += Rational(f.cyclo[j]) * zp;
            zp *= z;
        }
        CHECK(phi_at_z.is_zero());
    }
}

TEST_CASE("complex embedding tracks exact arithmetic") {
    auto rng = orbtest::make_rng(37);
    for (long n : {3L, 5L, 8L, 12L}) {
        for (int trial = 0; trial < 6; ++trial) {
            Cyclotomic a = orbtest::random_cyclotomic(rng, n);
            Cyclotomic b = orbtest::random_cyclotomic(rng, n);
            std::complex<double> lhs = (a * b).embed();
            std::complex<double> rhs = a.embed() * b.embed();
            CHECK(std::abs(lhs - rhs) < 1e-9);
            CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-9);
        }
    }
}

TEST_CASE("literal parsing") {
    using orb::parse_cyclotomic;
    CHECK(parse_cyclotomic("z", 5) == Cyclotomic::zeta(5));
    CHECK(parse_cyclotomic("z^3", 5) == Cyclotomic::zeta(5, 3));
    CHECK(parse_cyclotomic("0", 5) == Cyclotomic::zero(5));
    CHECK(parse_cyclotomic("2/3", 5) == Cyclotomic(5, Rational(2, 3)));
    CHECK(parse_cyclotomic("1/2*z^2", 8) ==
          Rational(1, 2) * Cyclotomic::zeta(8, 2));
    CHECK(parse_cyclotomic("1 + z - 2*z^2", 7) ==
          Cyclotomic::one(7) + Cyclotomic::zeta(7) -
              Rational(2) * Cyclotomic::zeta(7, 2));
    CHECK(parse_cyclotomic("-z + 1/3", 9) ==
          Cyclotomic(9, Rational(1, 3)) - Cyclotomic::zeta(9));
    CHECK(parse_cyclotomic("z^7", 7) == Cyclotomic::one(7));

    CHECK_THROWS_AS(parse_cyclotomic("z^", 5), InputError);
    CHECK_THROWS_AS(parse_cyclotomic("", 5), InputError);
    CHECK_THROWS_AS(parse_cyclotomic("1//2", 5), InputError);
    CHECK_THROWS_AS(parse_cyclotomic("q", 5), InputError);
    CHECK_THROWS_AS(parse_cyclotomic("1 +", 5), InputError);
    CHECK_THROWS_AS(parse_cyclotomic("1/0", 5), InputError);
}

TEST_CASE("printing round-trips through the parser") {
    auto rng = orbtest::make_rng(41);
    for (long n : {2L, 3L, 8L, 12L}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cyclotomic a = orbtest::random_cyclotomic(rng, n);
            CHECK(orb::parse_cyclotomic(a.str(), n) == a);
        }
    }
}
