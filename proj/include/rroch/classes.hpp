#pragma once

#include <string>
#include <vector>

#include "rroch/model.hpp"
#include "rroch/series.hpp"

namespace rroch {

/// A natural operation between theory rings, applied spacewise. Adams
/// operations and the identity stay inside multiplicative theory; the Chern
/// characters land in additive theory; extensions declare their target.
struct Transformation {
    enum class Kind {
        Adams,
        ChernCharacter,
        TwistedChernCharacter,
        AdditiveExt,
        MultiplicativeExt,
        Identity
    };

    Kind kind = Kind::Identity;
    long j = 1;
    int eps_order = 1;
    Theory source = Theory::K;
    Theory target = Theory::K;
    // Extensions carry the name and parameters of their defining series and
    // materialize it at whatever order an application needs.
    SeriesName ext_name = SeriesName::Exp;
    SeriesParams ext_params;

    static Transformation adams(long j);
    static Transformation chern_character();
    /// Nilpotent-twisted Chern character; eps_order >= 2.
    static Transformation twisted_chern_character(int eps_order);
    static Transformation additive_ext(SeriesName name, const SeriesParams& params,
                                       Theory target_theory);
    static Transformation multiplicative_ext(SeriesName name, const SeriesParams& params,
                                             Theory target_theory);
    static Transformation identity(Theory theory);

    UnivariateSeries defining_series(int order) const;

    /// CLI-facing name: "psi:2", "ch", "ch-eps:3", "id", "add-ext:...".
    std::string name() const;
};

/// F evaluated at an element with zero constant coefficient. The argument is
/// nilpotent, so the sum is finite; exactness demands the series order to be
/// at least the total dimension of the space (BadOrder otherwise).
TruncatedPolynomial evaluate_series_at(const UnivariateSeries& F,
                                       const TruncatedPolynomial& argument);

/// Multiplicative extension F_x(E) = prod over lines of F(c1 L)^mult.
/// A negative multiplicity inverts its factor; NonUnitFactor when that
/// factor's constant coefficient is not a unit.
TruncatedPolynomial multiplicative_extension(const UnivariateSeries& F, const VirtualBundle& E,
                                             const TheoryRing& ring);

/// Additive extension F_+ applied to a multiplicative-theory element: the
/// element is rewritten in the line basis and F(c1 L) is summed with the
/// same coefficients, in the target ring. The element and target must share
/// the space and nilpotency order.
TruncatedPolynomial additive_extension(const UnivariateSeries& F,
                                       const TruncatedPolynomial& element,
                                       const TheoryRing& target_ring);

/// Adams operation: [O(a)] -> [O(j a)] on the line basis, extended linearly.
/// j = 0 collapses every line to [O(0)], i.e. the rank map. Equals the
/// additive extension of (1-t)^{-j} for j != 0.
TruncatedPolynomial adams(long j, const TruncatedPolynomial& element);

/// Chern character: the additive extension of exp into additive theory
/// (plain rational coefficients).
TruncatedPolynomial chern_character(const TruncatedPolynomial& element);

/// Twisted Chern character: the additive extension of sum e^n t^n / n!,
/// for nilpotency order >= 2 (taken from the element's ring).
TruncatedPolynomial twisted_chern_character(const TruncatedPolynomial& element);

/// The Bott class of E: theta^j(dual E) computed as the multiplicative
/// extension of (1 - (1-t)^j)/t. Multiplicative-theory rings only; j != 0.
TruncatedPolynomial theta_class(long j, const VirtualBundle& E, const TheoryRing& ring);

/// The same class for j > 0 assembled literally: theta^j(L dual) =
/// 1 + [L*] + ... + [L*]^{j-1} per line, multiplied out. Used as an
/// independent cross-check of theta_class.
TruncatedPolynomial theta_class_literal(long j, const VirtualBundle& E, const TheoryRing& ring);

/// Chern classes c_0, ..., c_M of a virtual bundle (M = total dimension),
/// from the defining product over lines of (1 + c1(L) t)^{mult}.
std::vector<TruncatedPolynomial> chern_classes(const VirtualBundle& E, const TheoryRing& ring);

/// Newton power sum s_m(E), computed both additively over the lines and
/// through the Newton identities on the Chern classes; the two routes are
/// compared and NewtonMismatch is thrown if they ever disagree.
TruncatedPolynomial newton_s(long m, const VirtualBundle& E, const TheoryRing& ring);

/// Degree grading operator: multiplies the degree-n homogeneous part by j^n.
/// Additive-theory rings only.
TruncatedPolynomial phi_grading(long j, const TruncatedPolynomial& element);

/// Applies a transformation to an element of a matching source ring and
/// returns the element of the derived target ring.
TruncatedPolynomial apply_transformation(const Transformation& phi,
                                         const TruncatedPolynomial& element);

TheoryRing transformation_target_ring(const Transformation& phi, const TheoryRing& source_ring);

} // namespace rroch
