#pragma once

#include <optional>
#include <vector>

#include "rroch/classes.hpp"
#include "rroch/model.hpp"
#include "rroch/report.hpp"

namespace rroch {

/// The series S attached to a transformation phi by probing one projective
/// space: phi(c1 ξ) = S(c1_target ξ) * c1_target ξ on P^order, solved degree
/// by degree (the system is triangular with unit pivots). Returns S to order
/// `order` - 1; the result is independent of the probe dimension. BadOrder
/// for order < 1, SolveFailure if the probe value is not in the span
/// (impossible for the implemented transformations; kept as a guard).
UnivariateSeries associated_series(const Transformation& phi, int order);

/// Modified direct image f_*^S(a) = f_*(S_x(-T_f) * a). Requires S(0) to be
/// a unit (NonUnit otherwise); the factored two-sided form
/// S_x(T_target) * f_*(S_x(T_source)^{-1} * a) is always computed as well
/// and the two must agree exactly.
TruncatedPolynomial modified_pushforward(const UnivariateSeries& S,
                                         const MorphismDesc& morphism,
                                         const TruncatedPolynomial& element);

/// Verifies the closed-immersion Riemann-Roch square
///   phi(i_*(a)) = i_*(S_x(N_i) * phi(a))
/// over the monomial basis of the source ring (S never inverted, so twisted
/// transformations with non-unit S are fine). For Adams operations with
/// j > 0 the correction is cross-checked against the literal theta class,
/// and its coefficients receive integrality verdicts.
VerificationReport verify_immersion_rr(const Transformation& phi, const MorphismDesc& immersion,
                                       std::optional<int> sample_limit = {});

/// Verifies the projective-morphism Riemann-Roch square
///   phi(f_*(a)) = f_*(S_x(-T_f) * phi(a))
/// over the monomial basis. Requires an invertible S (NonUnit otherwise;
/// BadParam for the rank operation j = 0). Adams corrections are compared
/// with the classical inverse-theta form and certified j-local; the Chern
/// character correction is compared with the Todd class of T_f.
VerificationReport verify_projective_rr(const Transformation& phi, const MorphismDesc& morphism,
                                        std::optional<int> sample_limit = {});

/// Verifies the five compatibility squares tying the Adams operation, the
/// Chern character, the degree grading, and their modified direct images
/// together, for every implemented morphism on the space:
///   1. ch(psi^j(b)) = Phi^j(ch(b))
///   2. psi^j(f_*(b)) = f_*(B^j_x(-T_f) psi^j(b))
///   3. ch(f_*(b)) = f_*(Td(T_f) ch(b))
///   4. ch(f_*^{B^j}(b)) = f_*^{S^j}(ch(b))
///   5. Phi^j(f_*^{T}(a)) = f_*^{S^j}(Phi^j(a))
VerificationReport verify_cube(const Space& space, long j,
                               std::optional<int> sample_limit = {});

/// Verifies that the additive extension of 1/(1-t) into multiplicative
/// theory is the identity on every basis element, has associated series 1,
/// and commutes with every implemented direct image without correction.
VerificationReport verify_unique_k_morphism(const Space& space);

/// Every implemented morphism attached to the space, in deterministic
/// order: all projections dropping a nonempty factor subset, then all
/// one-factor linear immersions into the space of codimension 1..d.
std::vector<MorphismDesc> all_morphisms(const Space& space);

} // namespace rroch
