#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "rroch/errors.hpp"
#include "rroch/model.hpp"
#include "support.hpp"

using namespace rroch;

namespace {

const TheoryRing kP2CH{Space{{2}}, Theory::CH, 1};
const TheoryRing kP2K{Space{{2}}, Theory::K, 1};
const TheoryRing kP3K{Space{{3}}, Theory::K, 1};
const TheoryRing kP11K{Space{{1, 1}}, Theory::K, 1};

Coefficient rat(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return Coefficient::from_rational(q, 1);
}

} // namespace

TEST_CASE("spaces and bases")
{
    const Space space{{2, 1}};
    CHECK(space.factor_count() == 2);
    CHECK(space.total_dim() == 3);
    CHECK(space.str() == "2,1");
    CHECK(Space{}.str() == "pt");
    CHECK(Space{}.total_dim() == 0);

    const auto basis = space_basis(space);
    REQUIRE(basis.size() == 6);
    CHECK(basis.front() == std::vector<int>{0, 0});
    CHECK(basis[1] == std::vector<int>{0, 1});
    CHECK(basis[2] == std::vector<int>{1, 0});
    CHECK(basis.back() == std::vector<int>{2, 1});

    CHECK(space_basis(Space{}) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("polynomial arithmetic in the quotient ring")
{
    const TruncatedPolynomial y = TruncatedPolynomial::variable(kP2CH, 0);
    CHECK(y.str() == "y1");
    CHECK((y * y).str() == "y1^2");
    // y^3 = 0 on P^2.
    CHECK((y * y * y).is_zero());

    TruncatedPolynomial a = TruncatedPolynomial::one(kP2CH) + y;
    CHECK((a * a).str() == "1 + 2 * y1 + y1^2");
    CHECK((a - a).is_zero());
    CHECK((-a + a).is_zero());
    CHECK(a.scaled(rat(-1, 2)).str() == "-1/2 - 1/2 * y1");

    CHECK(a.coefficient({1}) == rat(1));
    CHECK(a.coefficient({2}).is_zero());
    CHECK(a.homogeneous_part(1) == y);

    TruncatedPolynomial capped(kP2CH);
    capped.add_term({5}, rat(7));
    CHECK(capped.is_zero());
    CHECK_THROWS_AS(capped.add_term({-1}, rat(1)), BadParam);
    CHECK_THROWS_AS(capped.add_term({1, 1}, rat(1)), RingMismatch);
    CHECK_THROWS_AS(capped.add_term({1}, Coefficient::one(2)), OrderMismatch);

    const TruncatedPolynomial other_theory = TruncatedPolynomial::one(kP2K);
    CHECK_THROWS_AS(a += other_theory, RingMismatch);
}

TEST_CASE("inverse and powers in the polynomial ring")
{
    const TruncatedPolynomial y = TruncatedPolynomial::variable(kP2K, 0);
    const TruncatedPolynomial one = TruncatedPolynomial::one(kP2K);

    const TruncatedPolynomial inv = (one - y).inverse();
    CHECK(inv.str() == "1 + y1 + y1^2");
    CHECK(inv * (one - y) == one);
    CHECK((one - y).pow(-1) == inv);
    CHECK((one - y).pow(-2) == (inv * inv));
    CHECK((one + y).pow(0) == one);
    CHECK_THROWS_AS(y.inverse(), NonUnit);

    std::mt19937 rng(20240819);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedPolynomial u = testing::random_element(rng, kP11K);
        u.add_term({0, 0}, Coefficient::one(1) - u.coefficient({0, 0}));
        u.add_term({0, 0}, Coefficient::one(1)); // constant part 2, a unit
        CHECK(u * u.inverse() == TruncatedPolynomial::one(kP11K));
    }
}

TEST_CASE("line classes and Chern classes")
{
    const LineClass l{{2, -1}};
    CHECK(l.str() == "O(2,-1)");
    CHECK(l.dual().multidegree == std::vector<int>{-2, 1});
    CHECK(l.tensor_power(3).multidegree == std::vector<int>{6, -3});
    CHECK(unit_line(2, 1).multidegree == std::vector<int>{0, 1});

    // CH: c1 is linear in the multidegree.
    const TheoryRing ring21{Space{{2, 1}}, Theory::CH, 1};
    CHECK(c1(ring21, LineClass{{2, -1}}).str() == "-y2 + 2 * y1");

    // K: c1(O(1)) = y, c1(O(2)) = 2y - y^2 on P^2.
    CHECK(c1(kP2K, LineClass{{1}}) == TruncatedPolynomial::variable(kP2K, 0));
    CHECK(c1(kP2K, LineClass{{2}}).str() == "2 * y1 - y1^2");

    // [O(1)] = 1 + y + y^2, [O(-1)] = 1 - y on P^2.
    CHECK(line_element(kP2K, LineClass{{1}}).str() == "1 + y1 + y1^2");
    CHECK(line_element(kP2K, LineClass{{-1}}).str() == "1 - y1");
    CHECK_THROWS_AS(line_element(kP2CH, LineClass{{1}}), WrongTheory);

    // [O(2,1)] on P^1 x P^1 = (1 + 2 y1)(1 + y2).
    const TruncatedPolynomial el = line_element(kP11K, LineClass{{2, 1}});
    CHECK(el.coefficient({0, 0}) == rat(1));
    CHECK(el.coefficient({1, 0}) == rat(2));
    CHECK(el.coefficient({0, 1}) == rat(1));
    CHECK(el.coefficient({1, 1}) == rat(2));

    // Line classes multiply by adding multidegrees.
    CHECK(line_element(kP3K, LineClass{{2}}) * line_element(kP3K, LineClass{{-1}}) ==
          line_element(kP3K, LineClass{{1}}));
}

TEST_CASE("line basis is triangular and invertible")
{
    // y = 1 - [O(-1)]; y1 y2 expands with signs by inclusion-exclusion.
    const LineCombo combo = to_line_basis(TruncatedPolynomial::variable(kP2K, 0));
    REQUIRE(combo.size() == 2);
    CHECK(combo.at(LineClass{{0}}) == rat(1));
    CHECK(combo.at(LineClass{{-1}}) == rat(-1));

    const TruncatedPolynomial y1y2 = TruncatedPolynomial::variable(kP11K, 0) *
                                     TruncatedPolynomial::variable(kP11K, 1);
    const LineCombo inclusion_exclusion = to_line_basis(y1y2);
    REQUIRE(inclusion_exclusion.size() == 4);
    CHECK(inclusion_exclusion.at(LineClass{{0, 0}}) == rat(1));
    CHECK(inclusion_exclusion.at(LineClass{{-1, 0}}) == rat(-1));
    CHECK(inclusion_exclusion.at(LineClass{{0, -1}}) == rat(-1));
    CHECK(inclusion_exclusion.at(LineClass{{-1, -1}}) == rat(1));

    CHECK(to_line_basis(line_element(kP3K, LineClass{{-2}})).size() == 1);

    std::mt19937 rng(20240820);
    for (int trial = 0; trial < 10; ++trial) {
        const TruncatedPolynomial element = testing::random_element(rng, kP11K);
        CHECK(from_line_basis(kP11K, to_line_basis(element)) == element);
    }
    CHECK_THROWS_AS(to_line_basis(TruncatedPolynomial::one(kP2CH)), WrongTheory);
}

TEST_CASE("quotient relation in the line basis")
{
    // sum_k (-1)^k C(d+1, k) [O(-k)] = (1 - (1 - y))^{d+1} = 0 on P^d.
    for (int d : {1, 2, 3, 4}) {
        const TheoryRing ring{Space{{d}}, Theory::K, 1};
        TruncatedPolynomial sum(ring);
        for (int k = 0; k <= d + 1; ++k) {
            const Rational weight((k % 2 == 0 ? 1 : -1) * binomial(d + 1, k));
            sum += line_element(ring, LineClass{{-k}})
                       .scaled(Coefficient::from_rational(weight, 1));
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("morphism descriptors")
{
    const Space space{{2, 1, 3}};
    const MorphismDesc proj = projection(space, {0, 2});
    CHECK(proj.kind == MorphismDesc::Kind::Projection);
    CHECK(proj.source == space);
    CHECK(proj.target == Space{{1}});
    CHECK(proj.kept == std::vector<int>{1});
    CHECK(proj.str() == "projection(space=2,1,3, drop=0,2)");

    const MorphismDesc imm = linear_immersion(Space{{3, 1}}, 0, 2);
    CHECK(imm.kind == MorphismDesc::Kind::LinearImmersion);
    CHECK(imm.source == Space{{1, 1}});
    CHECK(imm.target == Space{{3, 1}});
    CHECK(imm.str() == "immersion(space=3,1, factor=0, codim=2)");

    CHECK_THROWS_AS(projection(space, {0, 0}), BadParam);
    CHECK_THROWS_AS(projection(space, {3}), BadParam);
    CHECK_THROWS_AS(linear_immersion(Space{{2}}, 1, 1), BadParam);
    CHECK_THROWS_AS(linear_immersion(Space{{2}}, 0, 3), BadParam);
}

TEST_CASE("pullback and pushforward along projections")
{
    const Space space{{2, 1}};
    const TheoryRing src_add{space, Theory::CH, 1};
    const TheoryRing src_mult{space, Theory::K, 1};
    const MorphismDesc drop1 = projection(space, {1});

    // Pullback embeds the kept variables.
    const TheoryRing tgt_add{Space{{2}}, Theory::CH, 1};
    const TruncatedPolynomial lifted =
        pullback(drop1, TruncatedPolynomial::variable(tgt_add, 0));
    CHECK(lifted == TruncatedPolynomial::variable(src_add, 0));
    CHECK_THROWS_AS(pullback(drop1, TruncatedPolynomial::variable(src_add, 0)), RingMismatch);

    // CH pushforward keeps exactly the top power of the dropped factor.
    const TruncatedPolynomial y1 = TruncatedPolynomial::variable(src_add, 0);
    const TruncatedPolynomial y2 = TruncatedPolynomial::variable(src_add, 1);
    CHECK(pushforward(drop1, y1 * y2) == TruncatedPolynomial::variable(tgt_add, 0));
    CHECK(pushforward(drop1, y1).is_zero());
    CHECK(pushforward(drop1, TruncatedPolynomial::one(src_add)).is_zero());

    // K pushforward substitutes y = 1 in the dropped factor: the fiberwise
    // Euler characteristic.
    const TheoryRing tgt_mult{Space{{2}}, Theory::K, 1};
    const TruncatedPolynomial z1 = TruncatedPolynomial::variable(src_mult, 0);
    const TruncatedPolynomial z2 = TruncatedPolynomial::variable(src_mult, 1);
    CHECK(pushforward(drop1, z1 * z2) == TruncatedPolynomial::variable(tgt_mult, 0));
    CHECK(pushforward(drop1, TruncatedPolynomial::one(src_mult)) ==
          TruncatedPolynomial::one(tgt_mult));

    // chi(P^d, O(n)) through the model equals the combinatorial value.
    for (int d : {1, 2, 3, 4}) {
        const Space pd{{d}};
        const TheoryRing ring{pd, Theory::K, 1};
        const MorphismDesc to_point = projection(pd, {0});
        for (long n = -d - 4; n <= 6; ++n) {
            const Coefficient chi =
                pushforward(to_point, line_element(ring, LineClass{{static_cast<int>(n)}}))
                    .coefficient({});
            CHECK(chi.part(0) == Rational(testing::chi_reference(d, n)));
        }
    }
}

TEST_CASE("pullback and pushforward along immersions")
{
    const MorphismDesc imm = linear_immersion(Space{{2}}, 0, 1);
    const TheoryRing line_add{Space{{1}}, Theory::CH, 1};
    const TheoryRing plane_add{Space{{2}}, Theory::CH, 1};

    // i_*(1) is the hyperplane class, i_*(y) its square.
    CHECK(pushforward(imm, TruncatedPolynomial::one(line_add)) ==
          TruncatedPolynomial::variable(plane_add, 0));
    CHECK(pushforward(imm, TruncatedPolynomial::variable(line_add, 0)).str() == "y1^2");

    // Restriction truncates the top power: y^2 on P^2 pulls back to 0 on P^1.
    const TruncatedPolynomial sq = TruncatedPolynomial::variable(plane_add, 0).pow(2);
    CHECK(pullback(imm, sq).is_zero());

    // K-theory: i_*(1) = y = 1 - [O(-1)] on the ambient space.
    const TheoryRing line_mult{Space{{1}}, Theory::K, 1};
    const TheoryRing plane_mult{Space{{2}}, Theory::K, 1};
    CHECK(pushforward(imm, TruncatedPolynomial::one(line_mult)) ==
          TruncatedPolynomial::variable(plane_mult, 0));
}

TEST_CASE("projection formula and functoriality")
{
    std::mt19937 rng(20240821);
    const Space space{{2, 1}};
    for (Theory theory : {Theory::CH, Theory::K}) {
        const MorphismDesc f = projection(space, {0});
        const TheoryRing src{space, theory, 1};
        const TheoryRing tgt{f.target, theory, 1};
        for (int trial = 0; trial < 5; ++trial) {
            const TruncatedPolynomial a = testing::random_element(rng, src);
            const TruncatedPolynomial b = testing::random_element(rng, tgt);
            CHECK(pushforward(f, pullback(f, b) * a) == b * pushforward(f, a));
        }

        const MorphismDesc imm = linear_immersion(space, 0, 1);
        const TheoryRing sub{imm.source, theory, 1};
        for (int trial = 0; trial < 5; ++trial) {
            const TruncatedPolynomial a = testing::random_element(rng, sub);
            const TruncatedPolynomial b = testing::random_element(rng, src);
            CHECK(pushforward(imm, pullback(imm, b) * a) == b * pushforward(imm, a));
        }

        // (g o f)_* = g_* o f_* for stacked projections and immersions.
        const MorphismDesc both = projection(space, {0, 1});
        const MorphismDesc rest = projection(Space{{1}}, {0});
        const MorphismDesc first = linear_immersion(Space{{2}}, 0, 1);
        const MorphismDesc second = linear_immersion(Space{{3}}, 0, 1);
        const MorphismDesc composed = linear_immersion(Space{{3}}, 0, 2);
        const TheoryRing line{Space{{1}}, theory, 1};
        for (int trial = 0; trial < 5; ++trial) {
            const TruncatedPolynomial a = testing::random_element(rng, src);
            CHECK(pushforward(rest, pushforward(f, a)) == pushforward(both, a));
            const TruncatedPolynomial c = testing::random_element(rng, line);
            CHECK(pushforward(second, pushforward(first, c)) == pushforward(composed, c));
        }
    }
}

TEST_CASE("tangent, relative tangent, and normal bundles")
{
    CHECK(tangent_bundle(Space{{2}}).str() == "-O(0) + 3 O(1)");
    CHECK(tangent_bundle(Space{{2}}).rank() == 2);
    CHECK(tangent_bundle(Space{{1, 1}}).rank() == 2);
    CHECK(tangent_bundle(Space{{1, 1}}).lines().at(LineClass{{0, 0}}) == -2);

    const MorphismDesc drop1 = projection(Space{{2, 1}}, {1});
    const VirtualBundle fiberwise = relative_tangent(drop1);
    CHECK(fiberwise.rank() == 1);
    CHECK(fiberwise.lines().at(LineClass{{0, 1}}) == 2);
    CHECK(fiberwise.lines().at(LineClass{{0, 0}}) == -1);

    const MorphismDesc imm = linear_immersion(Space{{3}}, 0, 2);
    CHECK(normal_bundle(imm).lines().at(LineClass{{1}}) == 2);
    CHECK(relative_tangent(imm).rank() == -2);
    CHECK(relative_tangent(imm) == -normal_bundle(imm));
    CHECK_THROWS_AS(normal_bundle(drop1), NotImmersion);

    // The shortcut agrees with T_source - pullback(T_target).
    const VirtualBundle general =
        tangent_bundle(imm.source) - pullback_bundle(imm, tangent_bundle(imm.target));
    CHECK(relative_tangent(imm) == general);

    CHECK(pullback_line(drop1, LineClass{{3}}).multidegree == std::vector<int>{3, 0});
    CHECK(pullback_line(imm, LineClass{{2}}).multidegree == std::vector<int>{2});
}

TEST_CASE("group law evaluation on ring elements")
{
    // K: f(c1 O(a), c1 O(b)) = c1 O(a+b); CH: plain addition.
    const GroupLaw mult_law = theory_law(kP3K, 3);
    const TruncatedPolynomial lhs =
        evaluate_group_law(mult_law, c1(kP3K, LineClass{{2}}), c1(kP3K, LineClass{{-1}}));
    CHECK(lhs == c1(kP3K, LineClass{{1}}));

    const TheoryRing p3_add{Space{{3}}, Theory::CH, 1};
    const GroupLaw add_law = theory_law(p3_add, 3);
    CHECK(evaluate_group_law(add_law, c1(p3_add, LineClass{{2}}), c1(p3_add, LineClass{{-1}})) ==
          c1(p3_add, LineClass{{1}}));

    TruncatedPolynomial with_constant = TruncatedPolynomial::one(kP3K);
    CHECK_THROWS_AS(evaluate_group_law(mult_law, with_constant, c1(kP3K, LineClass{{1}})),
                    CompositionConstantTerm);
}

TEST_CASE("polynomial rendering and serialization")
{
    const TruncatedPolynomial y1 = TruncatedPolynomial::variable(kP11K, 0);
    const TruncatedPolynomial y2 = TruncatedPolynomial::variable(kP11K, 1);
    const TruncatedPolynomial mixed =
        TruncatedPolynomial::one(kP11K) - (y1 * y2).scaled(rat(1, 2));
    CHECK(mixed.str() == "1 - 1/2 * y1 y2");
    CHECK(TruncatedPolynomial(kP11K).str() == "0");

    const std::string json = mixed.to_json();
    CHECK(json.find("\"law\":\"K\"") != std::string::npos);
    CHECK(json.find("\"space\":[1,1]") != std::string::npos);
    CHECK(json.find("-1/2") != std::string::npos);
}
