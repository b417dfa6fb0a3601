#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rroch/coeff.hpp"
#include "rroch/series.hpp"

namespace rroch {

/// The two implemented theories: CH carries the additive group law, K the
/// multiplicative one.
enum class Theory { CH, K };

std::string theory_name(Theory theory);

/// A product of projective spaces P^{d1} x ... x P^{dk}. Zero factors is the
/// point. Factors are indexed from 0.
struct Space {
    std::vector<int> dims;

    int factor_count() const { return static_cast<int>(dims.size()); }
    int total_dim() const;

    auto operator<=>(const Space&) const = default;

    /// Comma-separated dimensions, "pt" for the point.
    std::string str() const;
};

/// Every basis exponent vector of the space, ascending lexicographically:
/// all e with 0 <= e_i <= d_i.
std::vector<std::vector<int>> space_basis(const Space& space);

/// Identifies one ring of the model: which space, which theory, and the
/// nilpotency order of the coefficients. Elements of distinct rings never
/// mix (RingMismatch).
struct TheoryRing {
    Space space;
    Theory theory = Theory::CH;
    int eps_order = 1;

    auto operator<=>(const TheoryRing&) const = default;
};

/// The group law of the ring's theory, expanded to the given order.
GroupLaw theory_law(const TheoryRing& ring, int order);

/// Element of A(X) = Q[e]/(e^p) [y1..yk] / (y1^{d1+1}, ..., yk^{dk+1}).
///
/// The generator convention: y_i is the first Chern class of the dual
/// tautological line bundle of factor i, i.e. y_i = c1(O(0,...,1,...,0)).
/// In CH the class of a hyperplane in factor i is exactly y_i; in K it is
/// 1 - [O(-e_i)] = y_i as well, and [O(-e_i)] = 1 - y_i.
///
/// Terms are kept in a map ordered lexicographically by exponent vector,
/// zero coefficients are never stored, and every exponent respects the
/// per-variable caps, so equality is map equality and all rendering is
/// deterministic.
class TruncatedPolynomial {
public:
    explicit TruncatedPolynomial(TheoryRing ring);

    static TruncatedPolynomial constant(const TheoryRing& ring, const Coefficient& value);
    static TruncatedPolynomial one(const TheoryRing& ring);
    static TruncatedPolynomial monomial(const TheoryRing& ring, const std::vector<int>& exp,
                                        const Coefficient& value);
    /// The generator y_{factor+1}.
    static TruncatedPolynomial variable(const TheoryRing& ring, int factor);

    const TheoryRing& ring() const { return ring_; }
    const std::map<std::vector<int>, Coefficient>& terms() const { return terms_; }

    /// Zero when the monomial is absent.
    Coefficient coefficient(const std::vector<int>& exp) const;
    /// Adds value to the coefficient of exp, pruning zeros. Exponents beyond
    /// a cap are discarded: they are zero in the quotient.
    void add_term(const std::vector<int>& exp, const Coefficient& value);

    bool is_zero() const;
    bool operator==(const TruncatedPolynomial& other) const;

    TruncatedPolynomial operator-() const;
    TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b)
    {
        return a += b;
    }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b)
    {
        return a -= b;
    }
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a,
                                         const TruncatedPolynomial& b);

    TruncatedPolynomial scaled(const Coefficient& factor) const;

    /// Multiplicative inverse: the constant coefficient must be a unit of
    /// Q[e]/(e^p) (NonUnit otherwise); the rest is nilpotent and handled by
    /// a finite geometric series.
    TruncatedPolynomial inverse() const;

    /// Integer power, negative exponents via inverse().
    TruncatedPolynomial pow(long exponent) const;

    /// The part of total degree n in the y variables.
    TruncatedPolynomial homogeneous_part(int degree) const;

    /// "c * y1^a y2^b + ...", terms in lexicographic exponent order.
    std::string str() const;
    /// {"space": [...], "law": "CH"|"K", "p": p, "terms": [{"exp": [...], "coeff": "..."}]}
    std::string to_json() const;

private:
    TheoryRing ring_;
    std::map<std::vector<int>, Coefficient> terms_;

    void require_same_ring(const TruncatedPolynomial& other) const;
};

/// A line bundle O(a1, ..., ak) identified by its multidegree.
struct LineClass {
    std::vector<int> multidegree;

    auto operator<=>(const LineClass&) const = default;

    LineClass dual() const;
    LineClass tensor_power(long n) const;
    std::string str() const;
};

LineClass trivial_line(int factor_count);
LineClass unit_line(int factor_count, int factor);

/// Formal integer combination of line classes; the model's K-theory objects
/// (tangent and normal bundles, correction-class arguments) all live here.
/// Zero multiplicities are never stored.
class VirtualBundle {
public:
    VirtualBundle() = default;

    static VirtualBundle line(const LineClass& l);

    const std::map<LineClass, int>& lines() const { return lines_; }
    int rank() const;
    bool empty() const { return lines_.empty(); }
    bool operator==(const VirtualBundle& other) const = default;

    void add(const LineClass& l, int multiplicity);

    VirtualBundle operator-() const;
    VirtualBundle& operator+=(const VirtualBundle& other);
    friend VirtualBundle operator+(VirtualBundle a, const VirtualBundle& b) { return a += b; }
    friend VirtualBundle operator-(VirtualBundle a, const VirtualBundle& b)
    {
        return a += -b;
    }

    /// Dualizes every line (negates multidegrees, keeps multiplicities).
    VirtualBundle dual() const;

    std::string str() const;

private:
    std::map<LineClass, int> lines_;
};

/// First Chern class of a line bundle in the ring's theory:
/// CH: sum a_i y_i; K: 1 - [O(-a)] = 1 - prod (1-y_i)^{a_i}.
TruncatedPolynomial c1(const TheoryRing& ring, const LineClass& l);

/// The K-theory class [O(a)] = prod (1-y_i)^{-a_i}. WrongTheory on CH.
TruncatedPolynomial line_element(const TheoryRing& ring, const LineClass& l);

/// Coefficient combination of line classes [O(a)], keyed by multidegree.
using LineCombo = std::map<LineClass, Coefficient>;

/// Rewrites a K-theory element in the line basis {[O(-e)] : 0 <= e_i <= d_i}.
/// The change of basis is triangular with unit diagonal, hence exact and
/// invertible; from_line_basis is its inverse (and also evaluates line
/// classes outside the basis range). WrongTheory on CH.
LineCombo to_line_basis(const TruncatedPolynomial& element);
TruncatedPolynomial from_line_basis(const TheoryRing& ring, const LineCombo& combo);

/// The two morphism shapes of the model, between products of projective
/// spaces:
///  - Projection: drops a subset of the factors (a product of full
///    projective-bundle projections over the kept factors).
///  - LinearImmersion: a linear embedding P^{d-c} into P^d in one factor,
///    the identity on the others.
struct MorphismDesc {
    enum class Kind { Projection, LinearImmersion };

    Kind kind = Kind::Projection;
    Space source;
    Space target;
    /// Projection: indices of the source factors that survive, ascending.
    std::vector<int> kept;
    /// Immersion: the embedded factor and its codimension.
    int factor = -1;
    int codim = 0;

    std::string str() const;
};

/// Projection of `source` dropping the listed factors (ascending, no
/// duplicates).
MorphismDesc projection(const Space& source, const std::vector<int>& dropped_factors);

/// Linear immersion into `target` of codimension `codim` in the given
/// factor (0 <= codim <= d_factor).
MorphismDesc linear_immersion(const Space& target, int factor, int codim);

/// Ring-morphism pullback. Projection: inclusion of variables. Immersion:
/// restriction, which truncates powers of the embedded factor's variable
/// above its smaller cap.
TruncatedPolynomial pullback(const MorphismDesc& morphism, const TruncatedPolynomial& element);

/// Direct image. Projection in CH extracts the coefficient of y_i^{d_i} for
/// every dropped factor; in K it substitutes y_i = 1 (the fiberwise Euler
/// characteristic). Immersion in both theories lifts terms verbatim and
/// multiplies by y_i^c.
TruncatedPolynomial pushforward(const MorphismDesc& morphism, const TruncatedPolynomial& element);

/// Tangent bundle of the space in line classes, from the Euler sequence:
/// sum over factors of (d_i + 1) O(e_i) - O(0).
VirtualBundle tangent_bundle(const Space& space);

/// Relative tangent bundle T_f = T_source - f^* T_target, on the source.
/// Projections: the dropped factors' tangent summands. Immersions: minus
/// the normal bundle.
VirtualBundle relative_tangent(const MorphismDesc& morphism);

/// Normal bundle of an immersion: codim copies of O(e_factor) on the
/// source. NotImmersion for projections.
VirtualBundle normal_bundle(const MorphismDesc& morphism);

/// A line class on the target pulled back to the source.
LineClass pullback_line(const MorphismDesc& morphism, const LineClass& l);
VirtualBundle pullback_bundle(const MorphismDesc& morphism, const VirtualBundle& bundle);

/// f^A(a, b): the ring's group law evaluated at two elements with zero
/// constant coefficient. Exact when the law's order is at least the total
/// dimension of the space.
TruncatedPolynomial evaluate_group_law(const GroupLaw& law, const TruncatedPolynomial& a,
                                       const TruncatedPolynomial& b);

} // namespace rroch
