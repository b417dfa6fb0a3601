#include "rroch/rr.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "rroch/errors.hpp"

namespace rroch {

namespace {

/// Applies one transformation through a cache of monomial images. Sound for
/// every kind the verifiers use because those are all Coefficient-linear;
/// multiplicative extensions are not and bypass the cache.
class TransformApplier {
public:
    explicit TransformApplier(Transformation phi) : phi_(std::move(phi)) {}

    TruncatedPolynomial apply(const TruncatedPolynomial& element)
    {
        if (phi_.kind == Transformation::Kind::MultiplicativeExt)
            return apply_transformation(phi_, element);
        TruncatedPolynomial out(transformation_target_ring(phi_, element.ring()));
        for (const auto& [exp, c] : element.terms())
            out += image(element.ring(), exp).scaled(c);
        return out;
    }

private:
    Transformation phi_;
    std::map<std::pair<TheoryRing, std::vector<int>>, TruncatedPolynomial> cache_;

    const TruncatedPolynomial& image(const TheoryRing& ring, const std::vector<int>& exp)
    {
        auto key = std::make_pair(ring, exp);
        auto found = cache_.find(key);
        if (found == cache_.end()) {
            TruncatedPolynomial value = apply_transformation(
                phi_,
                TruncatedPolynomial::monomial(ring, exp, Coefficient::one(ring.eps_order)));
            found = cache_.emplace(std::move(key), std::move(value)).first;
        }
        return found->second;
    }
};

std::vector<std::vector<int>> basis_with_limit(const Space& space, std::optional<int> limit)
{
    auto basis = space_basis(space);
    if (limit) {
        if (*limit < 1)
            throw BadParam("sample limit must be positive");
        if (static_cast<std::size_t>(*limit) < basis.size())
            basis.resize(static_cast<std::size_t>(*limit));
    }
    return basis;
}

std::string monomial_label(const TheoryRing& ring, const std::vector<int>& exp)
{
    return TruncatedPolynomial::monomial(ring, exp, Coefficient::one(ring.eps_order)).str();
}

void add_identity_case(VerificationReport& report, std::string input,
                       const TruncatedPolynomial& lhs, const TruncatedPolynomial& rhs)
{
    const TruncatedPolynomial residual = lhs - rhs;
    report.add_case(std::move(input), lhs.str(), rhs.str(), residual.str(), residual.is_zero());
}

void add_series_case(VerificationReport& report, std::string input, const UnivariateSeries& lhs,
                     const UnivariateSeries& rhs)
{
    const UnivariateSeries residual = lhs - rhs;
    report.add_case(std::move(input), lhs.str(), rhs.str(), residual.str(), residual.is_zero());
}

void record_correction_integrality(VerificationReport& report, const TruncatedPolynomial& corr,
                                   long j)
{
    for (const auto& [exp, c] : corr.terms()) {
        const IntegralityProfile profile = integrality_profile(c, j);
        report.integrality.push_back({"correction coefficient of " +
                                          monomial_label(corr.ring(), exp),
                                      profile.verdict, profile.denominator.get_str()});
    }
}

std::string dropped_factors_str(const MorphismDesc& morphism)
{
    std::string out;
    std::size_t at = 0;
    for (int i = 0; i < morphism.source.factor_count(); ++i) {
        if (at < morphism.kept.size() && morphism.kept[at] == i) {
            ++at;
            continue;
        }
        if (!out.empty())
            out += ",";
        out += std::to_string(i);
    }
    return out;
}

} // namespace

UnivariateSeries associated_series(const Transformation& phi, int order)
{
    if (order < 1)
        throw BadOrder("associated series needs a probe of dimension >= 1");

    const Space probe{{order}};
    const TheoryRing source_ring{probe, phi.source, phi.eps_order};
    const TheoryRing target_ring = transformation_target_ring(phi, source_ring);
    const LineClass tautological{{-1}};

    TruncatedPolynomial residual = apply_transformation(phi, c1(source_ring, tautological));
    const TruncatedPolynomial xbar = c1(target_ring, tautological);

    UnivariateSeries series(order - 1, phi.eps_order);
    TruncatedPolynomial power = xbar;
    for (int n = 0; n < order; ++n) {
        // The pivot is the coefficient of y^{n+1} in xbar^{n+1}, which is
        // (-1)^{n+1} in both theories, so the solve is exact.
        const Coefficient pivot = power.coefficient(std::vector<int>{n + 1});
        const Coefficient value = residual.coefficient(std::vector<int>{n + 1});
        const Coefficient solved = value * pivot.inverse();
        series.set_coeff(n, solved);
        residual -= power.scaled(solved);
        if (n + 1 < order)
            power = power * xbar;
    }
    if (!residual.is_zero())
        throw SolveFailure("transformation value is not spanned by powers of the Chern class");
    return series;
}

TruncatedPolynomial modified_pushforward(const UnivariateSeries& S, const MorphismDesc& morphism,
                                         const TruncatedPolynomial& element)
{
    if (!S.coeff(0).is_unit())
        throw NonUnit("modified direct image needs an invertible series");
    const TheoryRing& source_ring = element.ring();
    if (source_ring.space != morphism.source)
        throw RingMismatch("element does not live on the morphism source");
    const TheoryRing target_ring{morphism.target, source_ring.theory, source_ring.eps_order};

    const TruncatedPolynomial relative_form = pushforward(
        morphism,
        multiplicative_extension(S, -relative_tangent(morphism), source_ring) * element);

    const TruncatedPolynomial source_factor =
        multiplicative_extension(S, tangent_bundle(morphism.source), source_ring);
    const TruncatedPolynomial target_factor =
        multiplicative_extension(S, tangent_bundle(morphism.target), target_ring);
    const TruncatedPolynomial factored_form =
        target_factor * pushforward(morphism, source_factor.inverse() * element);

    if (!(relative_form == factored_form))
        throw Error("relative and factored modified direct images disagree");
    return relative_form;
}

VerificationReport verify_immersion_rr(const Transformation& phi, const MorphismDesc& immersion,
                                       std::optional<int> sample_limit)
{
    if (immersion.kind != MorphismDesc::Kind::LinearImmersion)
        throw NotImmersion("the immersion formula applies to linear immersions only");

    const int p = phi.eps_order;
    const TheoryRing ring_source{immersion.source, phi.source, p};
    const TheoryRing ring_target_theory{immersion.source, phi.target, p};

    // The correction lives on the small space, so its total dimension bounds
    // the order the series is ever evaluated at. S is never inverted here.
    const UnivariateSeries S = associated_series(phi, immersion.source.total_dim() + 1);
    const VirtualBundle normal = normal_bundle(immersion);
    const TruncatedPolynomial corr = multiplicative_extension(S, normal, ring_target_theory);

    VerificationReport report;
    report.name = "immersion-rr";
    report.params = {{"phi", phi.name()},
                     {"space", immersion.target.str()},
                     {"factor", std::to_string(immersion.factor)},
                     {"codim", std::to_string(immersion.codim)}};
    if (sample_limit)
        report.params["samples"] = std::to_string(*sample_limit);

    TransformApplier apply_phi(phi);
    for (const auto& exp : basis_with_limit(immersion.source, sample_limit)) {
        const TruncatedPolynomial a =
            TruncatedPolynomial::monomial(ring_source, exp, Coefficient::one(p));
        const TruncatedPolynomial lhs = apply_phi.apply(pushforward(immersion, a));
        const TruncatedPolynomial rhs = pushforward(immersion, corr * apply_phi.apply(a));
        add_identity_case(report, "a = " + monomial_label(ring_source, exp), lhs, rhs);
    }

    // The same correction through the general relative tangent bundle
    // T_source - i^* T_target instead of the normal bundle shortcut.
    const VirtualBundle general_relative =
        tangent_bundle(immersion.source) -
        pullback_bundle(immersion, tangent_bundle(immersion.target));
    add_identity_case(report, "correction: S_x(N) vs S_x(i^* T_target - T_source)", corr,
                      multiplicative_extension(S, -general_relative, ring_target_theory));

    if (phi.kind == Transformation::Kind::Adams) {
        if (phi.j > 0)
            add_identity_case(report, "correction vs literal theta class", corr,
                              theta_class_literal(phi.j, normal, ring_target_theory));
        // Immersion corrections for Adams operations are integral outright,
        // not merely j-local: j = 0 here means "certify plain integers".
        record_correction_integrality(report, corr, 0);
    }
    return report;
}

VerificationReport verify_projective_rr(const Transformation& phi, const MorphismDesc& morphism,
                                        std::optional<int> sample_limit)
{
    if (phi.kind == Transformation::Kind::Adams && phi.j == 0)
        throw BadParam("the rank operation has associated series 0 and no direct-image formula");

    const int p = phi.eps_order;
    const TheoryRing ring_source{morphism.source, phi.source, p};
    const TheoryRing ring_target_theory{morphism.source, phi.target, p};

    const int span = std::max(morphism.source.total_dim(), morphism.target.total_dim());
    const UnivariateSeries S = associated_series(phi, span + 1);
    if (!S.coeff(0).is_unit())
        throw NonUnit("associated series is not invertible; only the immersion formula applies");

    const VirtualBundle relative = relative_tangent(morphism);
    const TruncatedPolynomial corr =
        multiplicative_extension(S, -relative, ring_target_theory);

    VerificationReport report;
    report.name = "projective-rr";
    report.params = {{"phi", phi.name()},
                     {"source", morphism.source.str()},
                     {"target", morphism.target.str()}};
    if (morphism.kind == MorphismDesc::Kind::Projection) {
        report.params["drop"] = dropped_factors_str(morphism);
    } else {
        report.params["factor"] = std::to_string(morphism.factor);
        report.params["codim"] = std::to_string(morphism.codim);
    }
    if (sample_limit)
        report.params["samples"] = std::to_string(*sample_limit);

    TransformApplier apply_phi(phi);
    for (const auto& exp : basis_with_limit(morphism.source, sample_limit)) {
        const TruncatedPolynomial a =
            TruncatedPolynomial::monomial(ring_source, exp, Coefficient::one(p));
        const TruncatedPolynomial lhs = apply_phi.apply(pushforward(morphism, a));
        const TruncatedPolynomial rhs = pushforward(morphism, corr * apply_phi.apply(a));
        add_identity_case(report, "a = " + monomial_label(ring_source, exp), lhs, rhs);
    }

    if (phi.kind == Transformation::Kind::Adams) {
        // Classical form of the correction: the inverse theta class of the
        // cotangent bundle, built by a different route and inverted once.
        add_identity_case(report, "correction vs inverse theta class of Omega_f", corr,
                          theta_class(phi.j, relative, ring_target_theory).inverse());
        record_correction_integrality(report, corr, phi.j);
    }
    if (phi.kind == Transformation::Kind::ChernCharacter) {
        // Classical form: the Todd class of T_f.
        add_identity_case(
            report, "correction vs Todd class of T_f", corr,
            multiplicative_extension(series_invert(inverse_todd_series(span)), relative,
                                     ring_target_theory));
    }
    return report;
}

VerificationReport verify_cube(const Space& space, long j, std::optional<int> sample_limit)
{
    if (j == 0)
        throw BadParam("the compatibility cube needs j != 0");

    const TheoryRing ring_mult{space, Theory::K, 1};

    VerificationReport report;
    report.name = "cube";
    report.params = {{"space", space.str()}, {"j", std::to_string(j)}};
    if (sample_limit)
        report.params["samples"] = std::to_string(*sample_limit);

    TransformApplier apply_psi(Transformation::adams(j));
    TransformApplier apply_ch(Transformation::chern_character());

    // Face 1: the Chern character turns psi^j into the degree grading.
    for (const auto& exp : basis_with_limit(space, sample_limit)) {
        const TruncatedPolynomial b =
            TruncatedPolynomial::monomial(ring_mult, exp, Coefficient::one(1));
        add_identity_case(report, "face 1, b = " + monomial_label(ring_mult, exp),
                          apply_ch.apply(apply_psi.apply(b)),
                          phi_grading(j, apply_ch.apply(b)));
    }

    for (const MorphismDesc& f : all_morphisms(space)) {
        const TheoryRing src_mult{f.source, Theory::K, 1};
        const TheoryRing src_add{f.source, Theory::CH, 1};
        const int span = std::max(f.source.total_dim(), f.target.total_dim());
        const VirtualBundle relative = relative_tangent(f);

        const TruncatedPolynomial bott_corr =
            multiplicative_extension(bott_series(j, span), -relative, src_mult);
        const TruncatedPolynomial todd_corr =
            multiplicative_extension(inverse_todd_series(span), -relative, src_add);
        const TruncatedPolynomial sj_corr =
            multiplicative_extension(scaled_inverse_todd_series(j, span), -relative, src_add);

        const std::string tag = " [" + f.str() + "]";
        for (const auto& exp : basis_with_limit(f.source, sample_limit)) {
            const TruncatedPolynomial b_mult =
                TruncatedPolynomial::monomial(src_mult, exp, Coefficient::one(1));
            const TruncatedPolynomial b_add =
                TruncatedPolynomial::monomial(src_add, exp, Coefficient::one(1));
            const std::string label = monomial_label(src_mult, exp);

            add_identity_case(report, "face 2" + tag + ", b = " + label,
                              apply_psi.apply(pushforward(f, b_mult)),
                              pushforward(f, bott_corr * apply_psi.apply(b_mult)));
            add_identity_case(report, "face 3" + tag + ", b = " + label,
                              apply_ch.apply(pushforward(f, b_mult)),
                              pushforward(f, todd_corr * apply_ch.apply(b_mult)));
            add_identity_case(report, "face 4" + tag + ", b = " + label,
                              apply_ch.apply(pushforward(f, bott_corr * b_mult)),
                              pushforward(f, sj_corr * apply_ch.apply(b_mult)));
            add_identity_case(report, "face 5" + tag + ", a = " + label,
                              phi_grading(j, pushforward(f, todd_corr * b_add)),
                              pushforward(f, sj_corr * phi_grading(j, b_add)));
        }
    }
    return report;
}

VerificationReport verify_unique_k_morphism(const Space& space)
{
    const Transformation phi =
        Transformation::additive_ext(SeriesName::OneMinusTPow, SeriesParams{.j = -1}, Theory::K);
    const TheoryRing ring_mult{space, Theory::K, 1};

    VerificationReport report;
    report.name = "unique-k-morphism";
    report.params = {{"space", space.str()}};

    TransformApplier apply_phi(phi);
    for (const auto& exp : space_basis(space)) {
        const TruncatedPolynomial b =
            TruncatedPolynomial::monomial(ring_mult, exp, Coefficient::one(1));
        add_identity_case(report, "identity on " + monomial_label(ring_mult, exp),
                          apply_phi.apply(b), b);
    }

    const UnivariateSeries S = associated_series(phi, space.total_dim() + 1);
    add_series_case(report, "associated series", S,
                    UnivariateSeries::constant(Coefficient::one(1), S.order()));

    for (const MorphismDesc& f : all_morphisms(space)) {
        const TheoryRing src_mult{f.source, Theory::K, 1};
        for (const auto& exp : space_basis(f.source)) {
            const TruncatedPolynomial b =
                TruncatedPolynomial::monomial(src_mult, exp, Coefficient::one(1));
            add_identity_case(report,
                              "direct image [" + f.str() + "], b = " +
                                  monomial_label(src_mult, exp),
                              apply_phi.apply(pushforward(f, b)),
                              pushforward(f, apply_phi.apply(b)));
        }
    }
    return report;
}

std::vector<MorphismDesc> all_morphisms(const Space& space)
{
    std::vector<MorphismDesc> out;
    const int k = space.factor_count();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> dropped;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i))
                dropped.push_back(i);
        out.push_back(projection(space, dropped));
    }
    for (int factor = 0; factor < k; ++factor)
        for (int codim = 1; codim <= space.dims[factor]; ++codim)
            out.push_back(linear_immersion(space, factor, codim));
    return out;
}

} // namespace rroch
