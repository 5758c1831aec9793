#include "orbicalc/epoly.hpp"

#include <catch2/catch_amalgamated.hpp>

using orb::EPolynomial;
using orb::Rational;

TEST_CASE("projective and affine space polynomials") {
    EPolynomial p2 = EPolynomial::projective_space(2);
    CHECK(p2.eval_at_one() == 3);
    CHECK(p2.coeff(1, 1) == 1);
    CHECK(p2.coeff(2, 2) == 1);
    CHECK(p2.coeff(3, 3) == 0);

    EPolynomial a3 = EPolynomial::affine_space(3);
    CHECK(a3.eval_at_one() == 1);
    CHECK(a3.coeff(3, 3) == 1);
}

TEST_CASE("arithmetic with rational exponents") {
    EPolynomial half = EPolynomial::uv_pow(Rational(1, 2));
    EPolynomial prod = half * half;
    CHECK(prod == EPolynomial::uv_pow(Rational(1)));

    EPolynomial sum = half + half;
    CHECK(sum.coeff(Rational(1, 2), Rational(1, 2)) == 2);
    CHECK(sum.eval_at_one() == 2);

    // cancellation removes the term entirely
    EPolynomial zero = sum - Rational(2) * half;
    CHECK(zero.is_zero());
}

TEST_CASE("distributivity") {
    EPolynomial a = EPolynomial::projective_space(1);
    EPolynomial b = EPolynomial::uv_pow(Rational(1, 3));
    EPolynomial c = EPolynomial::uv_pow(Rational(2, 3));
    CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("reciprocal shift expresses Poincare duality") {
    // E(P^2) is self-dual with respect to dim 2
    EPolynomial p2 = EPolynomial::projective_space(2);
    CHECK(p2.reciprocal_shift(Rational(2)) == p2);

    EPolynomial skew = EPolynomial::uv_pow(Rational(1)) + EPolynomial::one();
    CHECK(skew.reciprocal_shift(Rational(3)) ==
          EPolynomial::uv_pow(Rational(2)) + EPolynomial::uv_pow(Rational(3)));
}

TEST_CASE("printing") {
    EPolynomial e = EPolynomial::one() + Rational(7) * EPolynomial::uv_pow(Rational(1)) +
                    EPolynomial::uv_pow(Rational(2));
    CHECK(e.str() == "1 + 7*(uv) + (uv)^2");
    CHECK(EPolynomial::uv_pow(Rational(1, 2)).str() == "(uv)^1/2");
}
