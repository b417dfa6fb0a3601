#include "rroch/classes.hpp"

#include <algorithm>

namespace rroch {

namespace {

std::vector<int> origin_exp(const TheoryRing& ring)
{
    return std::vector<int>(ring.space.dims.size(), 0);
}

std::string series_token(SeriesName name, const SeriesParams& params)
{
    switch (name) {
    case SeriesName::Bj:
        return "Bj:" + std::to_string(params.j);
    case SeriesName::InvTodd:
        return "T";
    case SeriesName::Sj:
        return "Sj:" + std::to_string(params.j);
    case SeriesName::OneMinusTPow:
        return "one-minus-t-pow:" + std::to_string(params.j);
    case SeriesName::Exp:
        return "exp";
    case SeriesName::ExpEps:
        return "exp-eps:" + std::to_string(params.eps_order);
    case SeriesName::Monomial:
        return "monomial:" + std::to_string(params.m);
    case SeriesName::TwistedInvTodd:
        return "twisted:" + std::to_string(params.eps_order);
    }
    return "?";
}

} // namespace

Transformation Transformation::adams(long j)
{
    Transformation phi;
    phi.kind = Kind::Adams;
    phi.j = j;
    phi.source = Theory::K;
    phi.target = Theory::K;
    return phi;
}

Transformation Transformation::chern_character()
{
    Transformation phi;
    phi.kind = Kind::ChernCharacter;
    phi.source = Theory::K;
    phi.target = Theory::CH;
    return phi;
}

Transformation Transformation::twisted_chern_character(int eps_order)
{
    if (eps_order < 2)
        throw BadParam("the twisted Chern character needs nilpotency order at least 2");
    Transformation phi;
    phi.kind = Kind::TwistedChernCharacter;
    phi.eps_order = eps_order;
    phi.source = Theory::K;
    phi.target = Theory::CH;
    return phi;
}

Transformation Transformation::additive_ext(SeriesName name, const SeriesParams& params,
                                            Theory target_theory)
{
    Transformation phi;
    phi.kind = Kind::AdditiveExt;
    phi.eps_order = params.eps_order;
    phi.source = Theory::K;
    phi.target = target_theory;
    phi.ext_name = name;
    phi.ext_params = params;
    return phi;
}

Transformation Transformation::multiplicative_ext(SeriesName name, const SeriesParams& params,
                                                  Theory target_theory)
{
    Transformation phi = additive_ext(name, params, target_theory);
    phi.kind = Kind::MultiplicativeExt;
    return phi;
}

Transformation Transformation::identity(Theory theory)
{
    Transformation phi;
    phi.kind = Kind::Identity;
    phi.source = theory;
    phi.target = theory;
    return phi;
}

UnivariateSeries Transformation::defining_series(int order) const
{
    if (kind != Kind::AdditiveExt && kind != Kind::MultiplicativeExt)
        throw BadParam("only extensions carry a defining series");
    return builtin_series(ext_name, ext_params, order);
}

std::string Transformation::name() const
{
    switch (kind) {
    case Kind::Adams:
        return "psi:" + std::to_string(j);
    case Kind::ChernCharacter:
        return "ch";
    case Kind::TwistedChernCharacter:
        return "ch-eps:" + std::to_string(eps_order);
    case Kind::AdditiveExt:
        return "add-ext:" + series_token(ext_name, ext_params);
    case Kind::MultiplicativeExt:
        return "mult-ext:" + series_token(ext_name, ext_params);
    case Kind::Identity:
        return "id";
    }
    return "?";
}

TruncatedPolynomial evaluate_series_at(const UnivariateSeries& F,
                                       const TruncatedPolynomial& argument)
{
    const TheoryRing& ring = argument.ring();
    const int bound = ring.space.total_dim();
    if (F.order() < bound)
        throw BadOrder("series order too small for this space");
    if (!argument.coefficient(origin_exp(ring)).is_zero())
        throw CompositionConstantTerm("series evaluation needs a nilpotent argument");

    TruncatedPolynomial out = TruncatedPolynomial::constant(ring, F.coeff(0));
    TruncatedPolynomial power = TruncatedPolynomial::one(ring);
    for (int n = 1; n <= bound; ++n) {
        power = power * argument;
        if (power.is_zero())
            break;
        out += power.scaled(F.coeff(n));
    }
    return out;
}

TruncatedPolynomial multiplicative_extension(const UnivariateSeries& F, const VirtualBundle& E,
                                             const TheoryRing& ring)
{
    TruncatedPolynomial out = TruncatedPolynomial::one(ring);
    for (const auto& [l, mult] : E.lines()) {
        TruncatedPolynomial factor = evaluate_series_at(F, c1(ring, l));
        if (mult < 0 && !factor.coefficient(origin_exp(ring)).is_unit())
            throw NonUnitFactor("negative power of the non-unit factor at " + l.str());
        out = out * factor.pow(mult);
    }
    return out;
}

TruncatedPolynomial additive_extension(const UnivariateSeries& F,
                                       const TruncatedPolynomial& element,
                                       const TheoryRing& target_ring)
{
    const TheoryRing& src = element.ring();
    if (src.theory != Theory::K)
        throw WrongTheory("additive extensions consume multiplicative-theory elements");
    if (!(src.space == target_ring.space))
        throw RingMismatch("additive extension must stay over one space");
    if (src.eps_order != target_ring.eps_order)
        throw OrderMismatch("source and target nilpotency orders differ");

    TruncatedPolynomial out(target_ring);
    for (const auto& [l, weight] : to_line_basis(element))
        out += evaluate_series_at(F, c1(target_ring, l)).scaled(weight);
    return out;
}

TruncatedPolynomial adams(long j, const TruncatedPolynomial& element)
{
    if (element.ring().theory != Theory::K)
        throw WrongTheory("Adams operations act on multiplicative theory");

    LineCombo combo = to_line_basis(element);
    LineCombo mapped;
    for (const auto& [l, weight] : combo) {
        LineClass key = l.tensor_power(j);
        auto it = mapped.find(key);
        if (it == mapped.end())
            mapped.emplace(key, weight);
        else
            it->second += weight;
    }
    return from_line_basis(element.ring(), mapped);
}

TruncatedPolynomial chern_character(const TruncatedPolynomial& element)
{
    const TheoryRing& src = element.ring();
    if (src.theory != Theory::K)
        throw WrongTheory("the Chern character consumes multiplicative-theory elements");
    if (src.eps_order != 1)
        throw OrderMismatch("the plain Chern character works at nilpotency order 1");
    TheoryRing target{src.space, Theory::CH, 1};
    return additive_extension(exp_series(src.space.total_dim(), 1), element, target);
}

TruncatedPolynomial twisted_chern_character(const TruncatedPolynomial& element)
{
    const TheoryRing& src = element.ring();
    if (src.theory != Theory::K)
        throw WrongTheory("the Chern character consumes multiplicative-theory elements");
    if (src.eps_order < 2)
        throw BadParam("the twisted Chern character needs nilpotency order at least 2");
    TheoryRing target{src.space, Theory::CH, src.eps_order};
    return additive_extension(exp_eps_series(src.space.total_dim(), src.eps_order), element,
                              target);
}

TruncatedPolynomial theta_class(long j, const VirtualBundle& E, const TheoryRing& ring)
{
    if (ring.theory != Theory::K)
        throw WrongTheory("theta classes live in multiplicative theory");
    if (j == 0)
        throw BadParam("theta needs j != 0");
    return multiplicative_extension(bott_series(j, ring.space.total_dim(), ring.eps_order), E,
                                    ring);
}

TruncatedPolynomial theta_class_literal(long j, const VirtualBundle& E, const TheoryRing& ring)
{
    if (ring.theory != Theory::K)
        throw WrongTheory("theta classes live in multiplicative theory");
    if (j < 1)
        throw BadParam("the literal theta expansion needs j > 0");

    TruncatedPolynomial out = TruncatedPolynomial::one(ring);
    for (const auto& [l, mult] : E.lines()) {
        // theta^j(L*) = 1 + [L*] + ... + [L*]^{j-1}, with [L*^i] = [O(-i a)].
        TruncatedPolynomial factor(ring);
        for (long i = 0; i < j; ++i)
            factor += line_element(ring, l.tensor_power(i).dual());
        if (mult < 0 &&
            !factor.coefficient(std::vector<int>(ring.space.dims.size(), 0)).is_unit())
            throw NonUnitFactor("negative power of the non-unit factor at " + l.str());
        out = out * factor.pow(mult);
    }
    return out;
}

namespace {

// Coefficient list of a polynomial in an auxiliary variable t whose
// coefficients are ring elements; used only to assemble total Chern classes.
using ClassSeries = std::vector<TruncatedPolynomial>;

ClassSeries cs_one(const TheoryRing& ring, std::size_t length)
{
    ClassSeries out(length, TruncatedPolynomial(ring));
    out[0] = TruncatedPolynomial::one(ring);
    return out;
}

ClassSeries cs_multiply(const ClassSeries& a, const ClassSeries& b)
{
    ClassSeries out(a.size(), TruncatedPolynomial(a[0].ring()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t k = 0; i + k < a.size(); ++k)
            out[i + k] += a[i] * b[k];
    }
    return out;
}

ClassSeries cs_invert(const ClassSeries& a)
{
    // The constant term of a total Chern class is 1.
    ClassSeries out(a.size(), TruncatedPolynomial(a[0].ring()));
    out[0] = TruncatedPolynomial::one(a[0].ring());
    for (std::size_t n = 1; n < a.size(); ++n) {
        TruncatedPolynomial acc(a[0].ring());
        for (std::size_t k = 1; k <= n; ++k)
            acc += a[k] * out[n - k];
        out[n] = -acc;
    }
    return out;
}

} // namespace

std::vector<TruncatedPolynomial> chern_classes(const VirtualBundle& E, const TheoryRing& ring)
{
    const std::size_t length = static_cast<std::size_t>(ring.space.total_dim()) + 1;
    ClassSeries total = cs_one(ring, length);
    for (const auto& [l, mult] : E.lines()) {
        ClassSeries linear = cs_one(ring, length);
        if (length > 1)
            linear[1] = c1(ring, l);
        ClassSeries factor = mult < 0 ? cs_invert(linear) : linear;
        for (int k = 0; k < std::abs(mult); ++k)
            total = cs_multiply(total, factor);
    }
    return total;
}

TruncatedPolynomial newton_s(long m, const VirtualBundle& E, const TheoryRing& ring)
{
    if (m < 0)
        throw BadParam("power sums are indexed by m >= 0");

    // Route one: additively over the line decomposition.
    TruncatedPolynomial direct(ring);
    for (const auto& [l, mult] : E.lines())
        direct += c1(ring, l).pow(m).scaled(
            Coefficient::from_integer(mult, ring.eps_order));

    // Route two: the Newton identities on the Chern classes.
    std::vector<TruncatedPolynomial> e = chern_classes(E, ring);
    const int cap = ring.space.total_dim();
    auto chern = [&](long i) {
        if (i < 0 || i > cap)
            return TruncatedPolynomial(ring);
        return e[static_cast<std::size_t>(i)];
    };

    std::vector<TruncatedPolynomial> p;
    p.push_back(TruncatedPolynomial::constant(
        ring, Coefficient::from_integer(E.rank(), ring.eps_order)));
    for (long k = 1; k <= m; ++k) {
        TruncatedPolynomial acc(ring);
        for (long i = 1; i < k; ++i) {
            TruncatedPolynomial summand = chern(i) * p[static_cast<std::size_t>(k - i)];
            if (i % 2 == 0)
                acc -= summand;
            else
                acc += summand;
        }
        TruncatedPolynomial tail =
            chern(k).scaled(Coefficient::from_integer(k, ring.eps_order));
        if (k % 2 == 0)
            acc -= tail;
        else
            acc += tail;
        p.push_back(acc);
    }

    if (!(p[static_cast<std::size_t>(m)] == direct))
        throw NewtonMismatch("power-sum routes disagree at m = " + std::to_string(m) +
                             " for E = " + E.str());
    return direct;
}

TruncatedPolynomial phi_grading(long j, const TruncatedPolynomial& element)
{
    const TheoryRing& ring = element.ring();
    if (ring.theory != Theory::CH)
        throw WrongTheory("the grading operator lives on additive theory");

    TruncatedPolynomial out(ring);
    for (const auto& [exp, c] : element.terms()) {
        int degree = 0;
        for (int v : exp)
            degree += v;
        Integer jp = 1;
        for (int n = 0; n < degree; ++n)
            jp *= j;
        out.add_term(exp, c.scaled(Rational(jp)));
    }
    return out;
}

TheoryRing transformation_target_ring(const Transformation& phi, const TheoryRing& source_ring)
{
    return TheoryRing{source_ring.space, phi.target, source_ring.eps_order};
}

TruncatedPolynomial apply_transformation(const Transformation& phi,
                                         const TruncatedPolynomial& element)
{
    const TheoryRing& ring = element.ring();
    if (ring.theory != phi.source)
        throw WrongTheory("element theory does not match the transformation source");

    switch (phi.kind) {
    case Transformation::Kind::Identity:
        return element;
    case Transformation::Kind::Adams:
        return adams(phi.j, element);
    case Transformation::Kind::ChernCharacter:
        return chern_character(element);
    case Transformation::Kind::TwistedChernCharacter:
        if (ring.eps_order != phi.eps_order)
            throw OrderMismatch("element nilpotency order does not match the transformation");
        return twisted_chern_character(element);
    case Transformation::Kind::AdditiveExt: {
        if (ring.eps_order != phi.eps_order)
            throw OrderMismatch("element nilpotency order does not match the transformation");
        TheoryRing target = transformation_target_ring(phi, ring);
        return additive_extension(phi.defining_series(ring.space.total_dim()), element, target);
    }
    case Transformation::Kind::MultiplicativeExt: {
        if (ring.eps_order != phi.eps_order)
            throw OrderMismatch("element nilpotency order does not match the transformation");
        VirtualBundle E;
        for (const auto& [l, weight] : to_line_basis(element)) {
            if (!weight.is_plain_rational() || weight.part(0).get_den() != 1)
                throw BadParam("multiplicative extension needs an integral class");
            E.add(l, static_cast<int>(weight.part(0).get_num().get_si()));
        }
        TheoryRing target = transformation_target_ring(phi, ring);
        return multiplicative_extension(phi.defining_series(target.space.total_dim()), E,
                                        target);
    }
    }
    throw BadParam("unknown transformation kind");
}

} // namespace rroch
