#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rroch/coeff.hpp"
#include "rroch/report.hpp"

namespace rroch {

/// Power series in one variable t, truncated at an explicit order D: exactly
/// D+1 stored coefficients, trailing zeros retained. A coefficient beyond the
/// order is unknown, not zero; binary operations truncate to the smaller
/// order of the two operands.
class UnivariateSeries {
public:
    UnivariateSeries(int order, int eps_order);

    static UnivariateSeries constant(const Coefficient& value, int order);
    /// The series t (requires order >= 1).
    static UnivariateSeries variable(int order, int eps_order);

    int order() const { return order_; }
    int eps_order() const { return coeffs_.front().eps_order(); }

    const Coefficient& coeff(int n) const;
    void set_coeff(int n, const Coefficient& value);

    bool is_zero() const;
    bool operator==(const UnivariateSeries& other) const;

    /// "c0 + c1*t + c2*t^2 + ..." with zero terms omitted ("0" for the zero
    /// series); nilpotent coefficients with several parts are parenthesized.
    std::string str() const;
    /// One string per coefficient, degree 0 first (the JSON rendering).
    std::vector<std::string> coeff_strings() const;

private:
    int order_;
    std::vector<Coefficient> coeffs_;
};

UnivariateSeries operator+(const UnivariateSeries& a, const UnivariateSeries& b);
UnivariateSeries operator-(const UnivariateSeries& a, const UnivariateSeries& b);
UnivariateSeries operator-(const UnivariateSeries& a);
UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b);
UnivariateSeries scaled(const UnivariateSeries& a, const Coefficient& factor);

/// Truncation to a smaller order (BadOrder when new_order exceeds the
/// current one: truncation never invents coefficients).
UnivariateSeries truncated(const UnivariateSeries& a, int new_order);

UnivariateSeries series_multiply(const UnivariateSeries& a, const UnivariateSeries& b);

/// f(g) for g with zero constant term (CompositionConstantTerm otherwise),
/// truncated to min(order f, order g).
UnivariateSeries series_compose(const UnivariateSeries& f, const UnivariateSeries& g);

/// Reciprocal 1/f; the constant term must be a unit (NonUnit otherwise).
UnivariateSeries series_invert(const UnivariateSeries& f);

/// Power series in two variables u, v truncated at total degree D; only
/// nonzero coefficients are stored.
class BivariateSeries {
public:
    BivariateSeries(int order, int eps_order);

    static BivariateSeries variable_u(int order, int eps_order);
    static BivariateSeries variable_v(int order, int eps_order);

    int order() const { return order_; }
    int eps_order() const { return eps_order_; }

    /// Zero when the monomial is absent.
    Coefficient coeff(int deg_u, int deg_v) const;
    void set_coeff(int deg_u, int deg_v, const Coefficient& value);

    const std::map<std::array<int, 2>, Coefficient>& terms() const { return terms_; }

    bool is_zero() const;
    bool operator==(const BivariateSeries& other) const;

    /// Terms ordered lexicographically by (deg_u, deg_v), e.g. "u + v - u v".
    std::string str() const;

private:
    int order_;
    int eps_order_;
    std::map<std::array<int, 2>, Coefficient> terms_;
};

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

/// f with the two variables exchanged.
BivariateSeries swap_variables(const BivariateSeries& f);

/// f(u, 0) as a univariate series in u.
UnivariateSeries restrict_to_u(const BivariateSeries& f);

/// The univariate series F embedded as a bivariate series in u alone (or in
/// v alone).
BivariateSeries embed_u(const UnivariateSeries& F, int order);
BivariateSeries embed_v(const UnivariateSeries& F, int order);

/// F(g) for a bivariate g with zero constant term.
BivariateSeries substitute(const UnivariateSeries& F, const BivariateSeries& g);

enum class LawKind { Additive, Multiplicative, Custom };

/// A one-dimensional formal group law, kept together with its expansion to
/// a fixed truncation order. Additive is u + v, multiplicative is
/// u + v - uv; a custom law is accepted only after passing the axioms check.
struct GroupLaw {
    LawKind kind = LawKind::Additive;
    BivariateSeries law;

    static GroupLaw additive(int order, int eps_order = 1);
    static GroupLaw multiplicative(int order, int eps_order = 1);
    /// Validates the candidate with check_group_law; BadParam on failure.
    static GroupLaw custom(const BivariateSeries& candidate);
};

/// The formal inverse: the unique series o with f(u, o(u)) = 0 and o(0) = 0,
/// solved degree by degree (the linear coefficient of u in f is 1 for any
/// valid law). SolveFailure when no solution exists.
UnivariateSeries opp_series(const GroupLaw& law);

/// Checks the group-law axioms for a candidate f at its truncation order:
/// commutativity, the unit law f(u,0) = u, associativity (expanded in three
/// variables, total degree bounded by the order), and existence of a formal
/// inverse. Failures are reported as failing cases, not errors.
VerificationReport check_group_law(const BivariateSeries& candidate);

/// Checks F(f(u,v)) = F(u) F(v) as truncated bivariate expansions.
VerificationReport check_multiplicativity(const UnivariateSeries& F, const GroupLaw& law);

enum class SeriesName {
    Bj,            // (1 - (1-t)^j) / t
    InvTodd,       // (1 - exp(-t)) / t
    Sj,            // (1 - exp(-jt)) / t
    OneMinusTPow,  // (1 - t)^j
    Exp,
    ExpEps,        // sum e^n t^n / n!
    Monomial,      // (-t)^(m-1)
    TwistedInvTodd // (1 - exp_e(-t)) / t
};

struct SeriesParams {
    long j = 0;
    long m = 0;
    int eps_order = 1;
};

/// Factory for the named series above; BadParam for j = 0 where j is a power
/// (Bj, Sj), m < 1 for Monomial, or eps_order < 2 for the twisted variants.
UnivariateSeries builtin_series(SeriesName name, const SeriesParams& params, int order);

UnivariateSeries bott_series(long j, int order, int eps_order = 1);
UnivariateSeries inverse_todd_series(int order, int eps_order = 1);
UnivariateSeries scaled_inverse_todd_series(long j, int order, int eps_order = 1);
UnivariateSeries one_minus_t_pow(long j, int order, int eps_order = 1);
UnivariateSeries exp_series(int order, int eps_order = 1);
UnivariateSeries exp_eps_series(int order, int eps_order);
UnivariateSeries monomial_series(long m, int order, int eps_order = 1);
UnivariateSeries twisted_inverse_todd_series(int order, int eps_order);
/// 1/(1-t): the defining series of the canonical additive extension into
/// multiplicative theory.
UnivariateSeries geometric_series(int order, int eps_order = 1);

} // namespace rroch
