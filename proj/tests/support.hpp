#pragma once

#include <random>
#include <vector>

#include "rroch/coeff.hpp"
#include "rroch/model.hpp"

namespace rroch::testing {

/// chi(P^d, O(n)) from the closed combinatorial formula, written out by
/// branch so the direct-image route is checked against something it does
/// not share code with.
inline Integer chi_reference(int d, long n)
{
    if (n >= 0)
        return binomial(n + d, static_cast<unsigned long>(d));
    if (n >= -static_cast<long>(d))
        return 0;
    const Integer value = binomial(-n - 1, static_cast<unsigned long>(d));
    return d % 2 == 0 ? value : Integer(-value);
}

inline Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rational value(num(rng), den(rng));
    value.canonicalize();
    return value;
}

inline Coefficient random_coefficient(std::mt19937& rng, int eps_order)
{
    Coefficient value(eps_order);
    for (int k = 0; k < eps_order; ++k)
        value.set_part(k, random_rational(rng));
    return value;
}

inline Coefficient random_unit(std::mt19937& rng, int eps_order)
{
    Coefficient value = random_coefficient(rng, eps_order);
    while (value.part(0) == 0)
        value.set_part(0, random_rational(rng));
    return value;
}

/// A random element of the ring: every basis monomial present with
/// probability 2/3, coefficients from random_coefficient.
inline TruncatedPolynomial random_element(std::mt19937& rng, const TheoryRing& ring)
{
    std::uniform_int_distribution<int> keep(0, 2);
    TruncatedPolynomial out(ring);
    for (const auto& exp : space_basis(ring.space))
        if (keep(rng) != 0)
            out.add_term(exp, random_coefficient(rng, ring.eps_order));
    return out;
}

/// A small virtual bundle with multidegrees in [-2, 2] and multiplicities
/// in [-2, 2] (possibly zero, possibly negative).
inline VirtualBundle random_bundle(std::mt19937& rng, int factor_count)
{
    std::uniform_int_distribution<int> deg(-2, 2);
    std::uniform_int_distribution<int> mult(-2, 2);
    std::uniform_int_distribution<int> count(1, 3);
    VirtualBundle out;
    const int lines = count(rng);
    for (int i = 0; i < lines; ++i) {
        std::vector<int> multidegree;
        for (int f = 0; f < factor_count; ++f)
            multidegree.push_back(deg(rng));
        out.add(LineClass{multidegree}, mult(rng));
    }
    return out;
}

} // namespace rroch::testing
