#include "rroch/model.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rroch {

namespace {

bool single_part(const Coefficient& c, int& power, Rational& value)
{
    int found = -1;
    for (int k = 0; k < c.eps_order(); ++k) {
        if (c.part(k) == 0)
            continue;
        if (found >= 0)
            return false;
        found = k;
    }
    if (found < 0)
        return false;
    power = found;
    value = c.part(found);
    return true;
}

// Appends one "c * monomial" term; the sign of a single-part coefficient is
// folded into the joiner and unit factors are dropped.
void append_poly_term(std::ostringstream& out, bool& first, const Coefficient& c,
                      const std::string& monomial)
{
    int power = 0;
    Rational value;
    std::string body;
    bool negative = false;

    if (single_part(c, power, value)) {
        negative = value < 0;
        Rational mag = negative ? Rational(-value) : value;
        std::string coeff_str;
        if (power == 0) {
            coeff_str = mag == 1 ? "" : mag.get_str();
        } else {
            std::string eps = power == 1 ? "e" : "e^" + std::to_string(power);
            coeff_str = mag == 1 ? eps : mag.get_str() + "*" + eps;
        }
        if (monomial.empty())
            body = coeff_str.empty() ? "1" : coeff_str;
        else if (coeff_str.empty())
            body = monomial;
        else
            body = coeff_str + " * " + monomial;
    } else {
        body = "(" + c.str() + ")" + (monomial.empty() ? "" : " * " + monomial);
    }

    if (first) {
        if (negative)
            out << "-";
        first = false;
    } else {
        out << (negative ? " - " : " + ");
    }
    out << body;
}

std::string exponent_monomial(const std::vector<int>& exp)
{
    std::string out;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0)
            continue;
        if (!out.empty())
            out += " ";
        out += "y" + std::to_string(i + 1);
        if (exp[i] > 1)
            out += "^" + std::to_string(exp[i]);
    }
    return out;
}

std::string join_ints(const std::vector<int>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

std::string theory_name(Theory theory)
{
    return theory == Theory::CH ? "CH" : "K";
}

int Space::total_dim() const
{
    int total = 0;
    for (int d : dims)
        total += d;
    return total;
}

std::string Space::str() const
{
    if (dims.empty())
        return "pt";
    return join_ints(dims);
}

std::vector<std::vector<int>> space_basis(const Space& space)
{
    std::vector<std::vector<int>> out;
    std::vector<int> exp(space.dims.size(), 0);
    for (;;) {
        out.push_back(exp);
        // Advance the rightmost digit first: ascending lexicographic order.
        int pos = static_cast<int>(exp.size()) - 1;
        while (pos >= 0) {
            if (exp[static_cast<std::size_t>(pos)] < space.dims[static_cast<std::size_t>(pos)]) {
                ++exp[static_cast<std::size_t>(pos)];
                break;
            }
            exp[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
    return out;
}

GroupLaw theory_law(const TheoryRing& ring, int order)
{
    if (ring.theory == Theory::CH)
        return GroupLaw::additive(order, ring.eps_order);
    return GroupLaw::multiplicative(order, ring.eps_order);
}

TruncatedPolynomial::TruncatedPolynomial(TheoryRing ring) : ring_(std::move(ring))
{
    if (ring_.eps_order < 1)
        throw BadParam("nilpotency order must be at least 1");
    for (int d : ring_.space.dims)
        if (d < 0)
            throw BadParam("negative projective dimension");
}

TruncatedPolynomial TruncatedPolynomial::constant(const TheoryRing& ring,
                                                  const Coefficient& value)
{
    TruncatedPolynomial out(ring);
    out.add_term(std::vector<int>(ring.space.dims.size(), 0), value);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::one(const TheoryRing& ring)
{
    return constant(ring, Coefficient::one(ring.eps_order));
}

TruncatedPolynomial TruncatedPolynomial::monomial(const TheoryRing& ring,
                                                  const std::vector<int>& exp,
                                                  const Coefficient& value)
{
    TruncatedPolynomial out(ring);
    out.add_term(exp, value);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::variable(const TheoryRing& ring, int factor)
{
    if (factor < 0 || factor >= ring.space.factor_count())
        throw BadParam("factor index outside the space");
    std::vector<int> exp(ring.space.dims.size(), 0);
    exp[static_cast<std::size_t>(factor)] = 1;
    return monomial(ring, exp, Coefficient::one(ring.eps_order));
}

Coefficient TruncatedPolynomial::coefficient(const std::vector<int>& exp) const
{
    auto it = terms_.find(exp);
    if (it == terms_.end())
        return Coefficient(ring_.eps_order);
    return it->second;
}

void TruncatedPolynomial::add_term(const std::vector<int>& exp, const Coefficient& value)
{
    if (exp.size() != ring_.space.dims.size())
        throw RingMismatch("exponent width does not match the space");
    if (value.eps_order() != ring_.eps_order)
        throw OrderMismatch("coefficient of a different nilpotency order");
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] < 0)
            throw BadParam("negative exponent");
        if (exp[i] > ring_.space.dims[i])
            return; // zero in the quotient
    }
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!value.is_zero())
            terms_.emplace(exp, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero())
        terms_.erase(it);
}

bool TruncatedPolynomial::is_zero() const
{
    return terms_.empty();
}

bool TruncatedPolynomial::operator==(const TruncatedPolynomial& other) const
{
    return ring_ == other.ring_ && terms_ == other.terms_;
}

void TruncatedPolynomial::require_same_ring(const TruncatedPolynomial& other) const
{
    if (!(ring_ == other.ring_))
        throw RingMismatch("elements of different rings mixed");
}

TruncatedPolynomial TruncatedPolynomial::operator-() const
{
    TruncatedPolynomial out(ring_);
    for (const auto& [exp, c] : terms_)
        out.terms_.emplace(exp, -c);
    return out;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other)
{
    require_same_ring(other);
    for (const auto& [exp, c] : other.terms_)
        add_term(exp, c);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other)
{
    require_same_ring(other);
    for (const auto& [exp, c] : other.terms_)
        add_term(exp, -c);
    return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
{
    a.require_same_ring(b);
    TruncatedPolynomial out(a.ring_);
    const std::vector<int>& caps = a.ring_.space.dims;
    std::vector<int> exp(caps.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool alive = true;
            for (std::size_t i = 0; i < caps.size(); ++i) {
                exp[i] = ea[i] + eb[i];
                if (exp[i] > caps[i]) {
                    alive = false;
                    break;
                }
            }
            if (!alive)
                continue;
            out.add_term(exp, ca * cb);
        }
    }
    return out;
}

TruncatedPolynomial TruncatedPolynomial::scaled(const Coefficient& factor) const
{
    TruncatedPolynomial out(ring_);
    if (factor.is_zero())
        return out;
    for (const auto& [exp, c] : terms_)
        out.add_term(exp, c * factor);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::inverse() const
{
    const std::vector<int> origin(ring_.space.dims.size(), 0);
    Coefficient lead = coefficient(origin);
    if (!lead.is_unit())
        throw NonUnit("element with non-unit constant coefficient has no inverse");
    Coefficient lead_inv = lead.inverse();

    // a = lead (1 + n) with n supported in positive y-degrees, so the
    // geometric series for (1 + n)^{-1} stops at the total dimension.
    TruncatedPolynomial n = scaled(lead_inv);
    n.add_term(origin, -Coefficient::one(ring_.eps_order));

    TruncatedPolynomial out = one(ring_);
    TruncatedPolynomial acc = one(ring_);
    const int bound = ring_.space.total_dim();
    for (int k = 1; k <= bound; ++k) {
        acc = acc * n;
        if (acc.is_zero())
            break;
        if (k % 2 == 1)
            out -= acc;
        else
            out += acc;
    }
    return out.scaled(lead_inv);
}

TruncatedPolynomial TruncatedPolynomial::pow(long exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    TruncatedPolynomial base(*this);
    TruncatedPolynomial out = one(ring_);
    long e = exponent;
    while (e > 0) {
        if (e & 1)
            out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

TruncatedPolynomial TruncatedPolynomial::homogeneous_part(int degree) const
{
    TruncatedPolynomial out(ring_);
    for (const auto& [exp, c] : terms_) {
        int total = 0;
        for (int e : exp)
            total += e;
        if (total == degree)
            out.add_term(exp, c);
    }
    return out;
}

std::string TruncatedPolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : terms_)
        append_poly_term(out, first, c, exponent_monomial(exp));
    return out.str();
}

std::string TruncatedPolynomial::to_json() const
{
    nlohmann::json j;
    j["space"] = ring_.space.dims;
    j["law"] = theory_name(ring_.theory);
    j["p"] = ring_.eps_order;
    j["terms"] = nlohmann::json::array();
    for (const auto& [exp, c] : terms_)
        j["terms"].push_back({{"exp", exp}, {"coeff", c.str()}});
    return j.dump();
}

LineClass LineClass::dual() const
{
    LineClass out = *this;
    for (int& a : out.multidegree)
        a = -a;
    return out;
}

LineClass LineClass::tensor_power(long n) const
{
    LineClass out = *this;
    for (int& a : out.multidegree)
        a = static_cast<int>(n * a);
    return out;
}

std::string LineClass::str() const
{
    return "O(" + join_ints(multidegree) + ")";
}

LineClass trivial_line(int factor_count)
{
    return LineClass{std::vector<int>(static_cast<std::size_t>(factor_count), 0)};
}

LineClass unit_line(int factor_count, int factor)
{
    LineClass l = trivial_line(factor_count);
    l.multidegree[static_cast<std::size_t>(factor)] = 1;
    return l;
}

VirtualBundle VirtualBundle::line(const LineClass& l)
{
    VirtualBundle out;
    out.add(l, 1);
    return out;
}

int VirtualBundle::rank() const
{
    int total = 0;
    for (const auto& [l, m] : lines_)
        total += m;
    return total;
}

void VirtualBundle::add(const LineClass& l, int multiplicity)
{
    if (multiplicity == 0)
        return;
    auto it = lines_.find(l);
    if (it == lines_.end()) {
        lines_.emplace(l, multiplicity);
        return;
    }
    it->second += multiplicity;
    if (it->second == 0)
        lines_.erase(it);
}

VirtualBundle VirtualBundle::operator-() const
{
    VirtualBundle out;
    for (const auto& [l, m] : lines_)
        out.lines_.emplace(l, -m);
    return out;
}

VirtualBundle& VirtualBundle::operator+=(const VirtualBundle& other)
{
    for (const auto& [l, m] : other.lines_)
        add(l, m);
    return *this;
}

VirtualBundle VirtualBundle::dual() const
{
    VirtualBundle out;
    for (const auto& [l, m] : lines_)
        out.add(l.dual(), m);
    return out;
}

std::string VirtualBundle::str() const
{
    if (lines_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [l, m] : lines_) {
        int mag = m < 0 ? -m : m;
        if (first) {
            if (m < 0)
                out << "-";
            first = false;
        } else {
            out << (m < 0 ? " - " : " + ");
        }
        if (mag != 1)
            out << mag << " ";
        out << l.str();
    }
    return out.str();
}

TruncatedPolynomial c1(const TheoryRing& ring, const LineClass& l)
{
    if (static_cast<int>(l.multidegree.size()) != ring.space.factor_count())
        throw RingMismatch("line class width does not match the space");
    if (ring.theory == Theory::CH) {
        TruncatedPolynomial out(ring);
        for (std::size_t i = 0; i < l.multidegree.size(); ++i) {
            if (l.multidegree[i] == 0)
                continue;
            std::vector<int> exp(l.multidegree.size(), 0);
            exp[i] = 1;
            out.add_term(exp, Coefficient::from_integer(l.multidegree[i], ring.eps_order));
        }
        return out;
    }
    // K: c1(L) = 1 - [L^dual], and [O(-a)] = prod (1-y_i)^{a_i}.
    return TruncatedPolynomial::one(ring) - line_element(ring, l.dual());
}

TruncatedPolynomial line_element(const TheoryRing& ring, const LineClass& l)
{
    if (ring.theory != Theory::K)
        throw WrongTheory("line classes are ring elements only in the multiplicative theory");
    if (static_cast<int>(l.multidegree.size()) != ring.space.factor_count())
        throw RingMismatch("line class width does not match the space");
    TruncatedPolynomial out = TruncatedPolynomial::one(ring);
    for (std::size_t i = 0; i < l.multidegree.size(); ++i) {
        if (l.multidegree[i] == 0)
            continue;
        TruncatedPolynomial base = TruncatedPolynomial::one(ring);
        base.add_term(unit_line(ring.space.factor_count(), static_cast<int>(i)).multidegree,
                      -Coefficient::one(ring.eps_order));
        out = out * base.pow(-static_cast<long>(l.multidegree[i]));
    }
    return out;
}

LineCombo to_line_basis(const TruncatedPolynomial& element)
{
    const TheoryRing& ring = element.ring();
    if (ring.theory != Theory::K)
        throw WrongTheory("the line basis exists only in the multiplicative theory");

    // y^f = prod_i (1 - (1-y_i))^{f_i}
    //     = sum over g <= f of prod_i binom(f_i, g_i) (-1)^{|g|} [O(-g)].
    LineCombo combo;
    for (const auto& [f, c] : element.terms()) {
        std::vector<int> g(f.size(), 0);
        for (;;) {
            Rational weight = 1;
            int total = 0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                weight *= Rational(binomial(f[i], static_cast<unsigned long>(g[i])));
                total += g[i];
            }
            if (total % 2 == 1)
                weight = -weight;

            LineClass key{g};
            for (int& a : key.multidegree)
                a = -a;
            auto it = combo.find(key);
            if (it == combo.end())
                it = combo.emplace(key, Coefficient(ring.eps_order)).first;
            it->second += c.scaled(weight);

            int pos = static_cast<int>(g.size()) - 1;
            while (pos >= 0) {
                if (g[static_cast<std::size_t>(pos)] < f[static_cast<std::size_t>(pos)]) {
                    ++g[static_cast<std::size_t>(pos)];
                    break;
                }
                g[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    }
    for (auto it = combo.begin(); it != combo.end();) {
        if (it->second.is_zero())
            it = combo.erase(it);
        else
            ++it;
    }
    return combo;
}

TruncatedPolynomial from_line_basis(const TheoryRing& ring, const LineCombo& combo)
{
    TruncatedPolynomial out(ring);
    for (const auto& [l, c] : combo)
        out += line_element(ring, l).scaled(c);
    return out;
}

std::string MorphismDesc::str() const
{
    if (kind == Kind::Projection) {
        std::vector<int> dropped;
        std::size_t at = 0;
        for (int i = 0; i < source.factor_count(); ++i) {
            if (at < kept.size() && kept[at] == i)
                ++at;
            else
                dropped.push_back(i);
        }
        return "projection(space=" + source.str() + ", drop=" + join_ints(dropped) + ")";
    }
    return "immersion(space=" + target.str() + ", factor=" + std::to_string(factor) +
           ", codim=" + std::to_string(codim) + ")";
}

MorphismDesc projection(const Space& source, const std::vector<int>& dropped_factors)
{
    std::vector<int> dropped = dropped_factors;
    std::sort(dropped.begin(), dropped.end());
    dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());
    if (dropped.size() != dropped_factors.size())
        throw BadParam("duplicate dropped factor");
    for (int i : dropped)
        if (i < 0 || i >= source.factor_count())
            throw BadParam("dropped factor outside the space");

    MorphismDesc m;
    m.kind = MorphismDesc::Kind::Projection;
    m.source = source;
    std::size_t at = 0;
    for (int i = 0; i < source.factor_count(); ++i) {
        if (at < dropped.size() && dropped[at] == i) {
            ++at;
            continue;
        }
        m.kept.push_back(i);
        m.target.dims.push_back(source.dims[static_cast<std::size_t>(i)]);
    }
    return m;
}

MorphismDesc linear_immersion(const Space& target, int factor, int codim)
{
    if (factor < 0 || factor >= target.factor_count())
        throw BadParam("immersion factor outside the space");
    if (codim < 0 || codim > target.dims[static_cast<std::size_t>(factor)])
        throw BadParam("immersion codimension outside 0..d");

    MorphismDesc m;
    m.kind = MorphismDesc::Kind::LinearImmersion;
    m.target = target;
    m.source = target;
    m.source.dims[static_cast<std::size_t>(factor)] -= codim;
    m.factor = factor;
    m.codim = codim;
    return m;
}

TruncatedPolynomial pullback(const MorphismDesc& morphism, const TruncatedPolynomial& element)
{
    if (!(element.ring().space == morphism.target))
        throw RingMismatch("pullback expects an element of the target ring");
    TheoryRing source_ring{morphism.source, element.ring().theory, element.ring().eps_order};
    TruncatedPolynomial out(source_ring);

    if (morphism.kind == MorphismDesc::Kind::Projection) {
        for (const auto& [exp, c] : element.terms()) {
            std::vector<int> lifted(morphism.source.dims.size(), 0);
            for (std::size_t t = 0; t < morphism.kept.size(); ++t)
                lifted[static_cast<std::size_t>(morphism.kept[t])] = exp[t];
            out.add_term(lifted, c);
        }
        return out;
    }

    // Restriction along the immersion: add_term drops the powers of the
    // embedded factor's variable that exceed its smaller cap.
    for (const auto& [exp, c] : element.terms())
        out.add_term(exp, c);
    return out;
}

TruncatedPolynomial pushforward(const MorphismDesc& morphism, const TruncatedPolynomial& element)
{
    if (!(element.ring().space == morphism.source))
        throw RingMismatch("pushforward expects an element of the source ring");
    TheoryRing target_ring{morphism.target, element.ring().theory, element.ring().eps_order};
    TruncatedPolynomial out(target_ring);

    if (morphism.kind == MorphismDesc::Kind::Projection) {
        std::vector<int> dropped;
        std::size_t at = 0;
        for (int i = 0; i < morphism.source.factor_count(); ++i) {
            if (at < morphism.kept.size() && morphism.kept[at] == i)
                ++at;
            else
                dropped.push_back(i);
        }

        const bool chow = element.ring().theory == Theory::CH;
        for (const auto& [exp, c] : element.terms()) {
            if (chow) {
                // Only the top power of every dropped factor survives.
                bool top = true;
                for (int i : dropped) {
                    if (exp[static_cast<std::size_t>(i)] !=
                        morphism.source.dims[static_cast<std::size_t>(i)]) {
                        top = false;
                        break;
                    }
                }
                if (!top)
                    continue;
            }
            // K: substituting y_i = 1 in every dropped factor folds all
            // powers onto the kept monomial.
            std::vector<int> reduced(morphism.kept.size());
            for (std::size_t t = 0; t < morphism.kept.size(); ++t)
                reduced[t] = exp[static_cast<std::size_t>(morphism.kept[t])];
            out.add_term(reduced, c);
        }
        return out;
    }

    for (const auto& [exp, c] : element.terms()) {
        std::vector<int> lifted = exp;
        lifted[static_cast<std::size_t>(morphism.factor)] += morphism.codim;
        out.add_term(lifted, c);
    }
    return out;
}

VirtualBundle tangent_bundle(const Space& space)
{
    VirtualBundle out;
    const int k = space.factor_count();
    for (int i = 0; i < k; ++i) {
        out.add(unit_line(k, i), space.dims[static_cast<std::size_t>(i)] + 1);
        out.add(trivial_line(k), -1);
    }
    return out;
}

VirtualBundle relative_tangent(const MorphismDesc& morphism)
{
    if (morphism.kind == MorphismDesc::Kind::LinearImmersion)
        return -normal_bundle(morphism);

    VirtualBundle out;
    const int k = morphism.source.factor_count();
    std::size_t at = 0;
    for (int i = 0; i < k; ++i) {
        if (at < morphism.kept.size() && morphism.kept[at] == i) {
            ++at;
            continue;
        }
        out.add(unit_line(k, i), morphism.source.dims[static_cast<std::size_t>(i)] + 1);
        out.add(trivial_line(k), -1);
    }
    return out;
}

VirtualBundle normal_bundle(const MorphismDesc& morphism)
{
    if (morphism.kind != MorphismDesc::Kind::LinearImmersion)
        throw NotImmersion("normal bundle requested for a projection");
    VirtualBundle out;
    out.add(unit_line(morphism.source.factor_count(), morphism.factor), morphism.codim);
    return out;
}

LineClass pullback_line(const MorphismDesc& morphism, const LineClass& l)
{
    if (static_cast<int>(l.multidegree.size()) != morphism.target.factor_count())
        throw RingMismatch("line class width does not match the target");
    if (morphism.kind == MorphismDesc::Kind::LinearImmersion)
        return l;
    LineClass out = trivial_line(morphism.source.factor_count());
    for (std::size_t t = 0; t < morphism.kept.size(); ++t)
        out.multidegree[static_cast<std::size_t>(morphism.kept[t])] = l.multidegree[t];
    return out;
}

VirtualBundle pullback_bundle(const MorphismDesc& morphism, const VirtualBundle& bundle)
{
    VirtualBundle out;
    for (const auto& [l, m] : bundle.lines())
        out.add(pullback_line(morphism, l), m);
    return out;
}

TruncatedPolynomial evaluate_group_law(const GroupLaw& law, const TruncatedPolynomial& a,
                                       const TruncatedPolynomial& b)
{
    if (!(a.ring() == b.ring()))
        throw RingMismatch("group-law arguments live in different rings");
    const std::vector<int> origin(a.ring().space.dims.size(), 0);
    if (!a.coefficient(origin).is_zero() || !b.coefficient(origin).is_zero())
        throw CompositionConstantTerm("group-law arguments need zero constant coefficient");

    int max_u = 0;
    int max_v = 0;
    for (const auto& [exp, c] : law.law.terms()) {
        max_u = std::max(max_u, exp[0]);
        max_v = std::max(max_v, exp[1]);
    }

    std::vector<TruncatedPolynomial> pow_a{TruncatedPolynomial::one(a.ring())};
    std::vector<TruncatedPolynomial> pow_b{TruncatedPolynomial::one(a.ring())};
    for (int k = 1; k <= max_u; ++k)
        pow_a.push_back(pow_a.back() * a);
    for (int k = 1; k <= max_v; ++k)
        pow_b.push_back(pow_b.back() * b);

    TruncatedPolynomial out(a.ring());
    for (const auto& [exp, c] : law.law.terms()) {
        TruncatedPolynomial prod = pow_a[static_cast<std::size_t>(exp[0])] *
                                   pow_b[static_cast<std::size_t>(exp[1])];
        out += prod.scaled(c);
    }
    return out;
}

} // namespace rroch
