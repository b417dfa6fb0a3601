#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rroch/errors.hpp"

namespace rroch {

using Rational = mpq_class;
using Integer = mpz_class;

/// Element of Q[e]/(e^p): a truncated polynomial in a nilpotent variable e
/// with exact rational parts. p >= 1 is the nilpotency order and is uniform
/// across any one computation; p = 1 is the plain rational case. All
/// arithmetic is exact, parts are kept in lowest terms by GMP.
class Coefficient {
public:
    /// Zero of the given nilpotency order.
    explicit Coefficient(int eps_order);

    static Coefficient from_rational(const Rational& value, int eps_order);
    static Coefficient from_integer(long value, int eps_order);
    static Coefficient one(int eps_order);
    /// The nilpotent generator e (requires eps_order >= 2).
    static Coefficient eps(int eps_order);

    int eps_order() const { return static_cast<int>(parts_.size()); }

    /// Part of degree k in e, zero when k >= eps_order.
    const Rational& part(int k) const;
    void set_part(int k, const Rational& value);

    bool is_zero() const;
    /// Units of Q[e]/(e^p) are exactly the elements with nonzero e^0 part.
    bool is_unit() const;
    /// True when every part of positive degree vanishes.
    bool is_plain_rational() const;

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& other);
    Coefficient& operator-=(const Coefficient& other);
    Coefficient& operator*=(const Coefficient& other);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }

    Coefficient scaled(const Rational& factor) const;

    /// Multiplicative inverse. The e^0 part must be nonzero (NonUnit
    /// otherwise); the nilpotent remainder is handled by a finite geometric
    /// series, so the result is exact.
    Coefficient inverse() const;

    /// Integer power, negative exponents via inverse().
    Coefficient pow(long exponent) const;

    bool operator==(const Coefficient& other) const;

    /// Canonical rendering: "0", "a/b", "a/b + c/d*e^k", with "e" for the
    /// nilpotent generator and negative parts folded into " - ".
    std::string str() const;

private:
    // parts_[k] is the coefficient of e^k; the vector always has exactly
    // eps_order entries, trailing zeros included.
    std::vector<Rational> parts_;

    void require_same_order(const Coefficient& other) const;
};

enum class IntegralityVerdict { Integer, JLocal, Rational };

struct IntegralityProfile {
    IntegralityVerdict verdict;
    Integer denominator;
};

/// Classifies a plain rational (eps_order must be 1): Integer when the
/// denominator is 1; JLocal when every prime factor of the denominator
/// divides j; Rational otherwise. j = 0 never certifies JLocal.
IntegralityProfile integrality_profile(const Coefficient& value, long j);

std::string to_string(IntegralityVerdict verdict);

/// Parses "a", "a/b", or a sum of such terms with optional "*e^k" factors,
/// e.g. "1/2 - 1/3*e^2". Throws BadParam on malformed input.
Coefficient parse_coefficient(const std::string& text, int eps_order);

/// Generalized binomial coefficient C(n, k) for any integer n and k >= 0.
Integer binomial(long n, unsigned long k);

/// k! as an exact integer.
Integer factorial(unsigned long k);

} // namespace rroch
