#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rroch/coeff.hpp"
#include "rroch/errors.hpp"
#include "support.hpp"

using namespace rroch;

TEST_CASE("construction and parts")
{
    const Coefficient zero(3);
    CHECK(zero.is_zero());
    CHECK(zero.eps_order() == 3);
    CHECK_FALSE(zero.is_unit());
    CHECK(zero.is_plain_rational());

    const Coefficient one = Coefficient::one(2);
    CHECK(one.is_unit());
    CHECK(one.part(0) == 1);
    CHECK(one.part(1) == 0);
    CHECK(one.part(7) == 0);

    const Coefficient eps = Coefficient::eps(2);
    CHECK_FALSE(eps.is_unit());
    CHECK_FALSE(eps.is_zero());
    CHECK_FALSE(eps.is_plain_rational());
    CHECK(eps.part(1) == 1);

    CHECK_THROWS_AS(Coefficient(0), BadParam);
    CHECK_THROWS_AS(Coefficient::eps(1), BadParam);
    Coefficient writable(2);
    CHECK_THROWS_AS(writable.set_part(2, Rational(1)), BadParam);
    CHECK_THROWS_AS(writable.part(-1), BadParam);
}

TEST_CASE("arithmetic truncates at the nilpotency order")
{
    // (1/2 + e)(2 - e) = 1 + 3/2 e - e^2.
    Coefficient a = Coefficient::from_rational(Rational(1, 2), 3);
    a += Coefficient::eps(3);
    Coefficient b = Coefficient::from_integer(2, 3);
    b -= Coefficient::eps(3);

    const Coefficient product = a * b;
    CHECK(product.part(0) == 1);
    CHECK(product.part(1) == Rational(3, 2));
    CHECK(product.part(2) == -1);

    // The same product at order 2 drops the e^2 part.
    Coefficient a2 = Coefficient::from_rational(Rational(1, 2), 2);
    a2 += Coefficient::eps(2);
    Coefficient b2 = Coefficient::from_integer(2, 2);
    b2 -= Coefficient::eps(2);
    const Coefficient product2 = a2 * b2;
    CHECK(product2.part(0) == 1);
    CHECK(product2.part(1) == Rational(3, 2));
    CHECK(product2.part(2) == 0);

    CHECK((a - a).is_zero());
    CHECK((-a + a).is_zero());
    CHECK(a.scaled(Rational(2)).part(0) == 1);

    const Coefficient other_order = Coefficient::one(2);
    CHECK_THROWS_AS(a += other_order, OrderMismatch);
    CHECK_THROWS_AS(a *= other_order, OrderMismatch);
}

TEST_CASE("inverse and powers")
{
    // (1 + e)^{-1} = 1 - e + e^2 at order 3.
    Coefficient u = Coefficient::one(3) + Coefficient::eps(3);
    const Coefficient inv = u.inverse();
    CHECK(inv.part(0) == 1);
    CHECK(inv.part(1) == -1);
    CHECK(inv.part(2) == 1);
    CHECK(u * inv == Coefficient::one(3));

    // (2 + e)^{-1} = 1/2 - 1/4 e + 1/8 e^2.
    const Coefficient half = (Coefficient::from_integer(2, 3) + Coefficient::eps(3)).inverse();
    CHECK(half.part(0) == Rational(1, 2));
    CHECK(half.part(1) == Rational(-1, 4));
    CHECK(half.part(2) == Rational(1, 8));

    // (1 + e)^3 = 1 + 3e + 3e^2 at order 3.
    const Coefficient cube = u.pow(3);
    CHECK(cube.part(0) == 1);
    CHECK(cube.part(1) == 3);
    CHECK(cube.part(2) == 3);

    CHECK(u.pow(0) == Coefficient::one(3));
    CHECK(u.pow(-2) == u.inverse().pow(2));

    CHECK_THROWS_AS(Coefficient::eps(2).inverse(), NonUnit);
    CHECK_THROWS_AS(Coefficient(1).inverse(), NonUnit);

    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        const Coefficient c = testing::random_unit(rng, 4);
        CHECK(c * c.inverse() == Coefficient::one(4));
    }
}

TEST_CASE("rendering and parsing round-trip")
{
    CHECK(Coefficient(2).str() == "0");
    CHECK(Coefficient::from_rational(Rational(-1, 2), 1).str() == "-1/2");
    CHECK((Coefficient::one(2) + Coefficient::eps(2)).str() == "1 + 1*e");
    CHECK(Coefficient::eps(3).pow(2).scaled(Rational(-1, 3)).str() == "-1/3*e^2");

    const Coefficient parsed = parse_coefficient("1/2 - 1/3*e^2", 3);
    CHECK(parsed.part(0) == Rational(1, 2));
    CHECK(parsed.part(1) == 0);
    CHECK(parsed.part(2) == Rational(-1, 3));
    CHECK(parsed.str() == "1/2 - 1/3*e^2");

    CHECK(parse_coefficient("e", 2) == Coefficient::eps(2));
    CHECK(parse_coefficient("-e", 2) == -Coefficient::eps(2));
    CHECK(parse_coefficient("3", 1) == Coefficient::from_integer(3, 1));
    // Rejecting an out-of-range power beats silently truncating the input.
    CHECK_THROWS_AS(parse_coefficient("1 + 5*e^7", 2), BadParam);
    CHECK(parse_coefficient("1 + 0*e^7", 2) == Coefficient::one(2));

    CHECK_THROWS_AS(parse_coefficient("x", 1), BadParam);
    CHECK_THROWS_AS(parse_coefficient("1/0", 1), BadParam);
    CHECK_THROWS_AS(parse_coefficient("2*f", 2), BadParam);
    CHECK_THROWS_AS(parse_coefficient("", 1), BadParam);
}

TEST_CASE("binomial and factorial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    // Generalized upper index: C(-3, 2) = 6, C(-1, k) = (-1)^k.
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-1, 4) == 1);
    CHECK(binomial(-4, 3) == -20);
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
}

TEST_CASE("integrality verdicts")
{
    auto profile = [](const Rational& q, long j) {
        return integrality_profile(Coefficient::from_rational(q, 1), j);
    };

    CHECK(profile(Rational(4), 2).verdict == IntegralityVerdict::Integer);
    CHECK(profile(Rational(0), 0).verdict == IntegralityVerdict::Integer);
    CHECK(profile(Rational(1, 8), 2).verdict == IntegralityVerdict::JLocal);
    CHECK(profile(Rational(1, 6), 6).verdict == IntegralityVerdict::JLocal);
    CHECK(profile(Rational(1, 6), -6).verdict == IntegralityVerdict::JLocal);
    CHECK(profile(Rational(1, 6), 2).verdict == IntegralityVerdict::Rational);
    CHECK(profile(Rational(1, 12), 2).verdict == IntegralityVerdict::Rational);
    CHECK(profile(Rational(1, 12), 6).verdict == IntegralityVerdict::JLocal);
    // j = 0 certifies nothing beyond plain integrality.
    CHECK(profile(Rational(1, 2), 0).verdict == IntegralityVerdict::Rational);
    CHECK(profile(Rational(1, 8), 2).denominator == 8);

    CHECK(to_string(IntegralityVerdict::Integer) == "INTEGER");
    CHECK(to_string(IntegralityVerdict::JLocal) == "J_LOCAL");
    CHECK(to_string(IntegralityVerdict::Rational) == "RATIONAL");

    CHECK_THROWS_AS(integrality_profile(Coefficient::one(2), 2), OrderMismatch);
}
