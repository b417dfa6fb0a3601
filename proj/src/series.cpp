#include "rroch/series.hpp"

#include <algorithm>
#include <sstream>

namespace rroch {

namespace {

// Locates the single nonzero part of a coefficient, if there is exactly one.
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

// Appends "c*monomial" to the stream, folding the sign of single-part
// coefficients into the " + " / " - " joiner and dropping unit factors.
void append_term(std::ostringstream& out, bool& first, const Coefficient& c,
                 const std::string& monomial)
{
    int power = 0;
    Rational value;
    std::string body;
    bool negative = false;

    if (single_part(c, power, value)) {
        negative = value < 0;
        Rational mag = negative ? Rational(-value) : value;
        std::string eps;
        if (power == 1)
            eps = "e";
        else if (power > 1)
            eps = "e^" + std::to_string(power);

        if (power == 0) {
            if (mag == 1 && !monomial.empty())
                body = monomial;
            else
                body = mag.get_str() + (monomial.empty() ? "" : "*" + monomial);
        } else {
            body = (mag == 1 ? eps : mag.get_str() + "*" + eps);
            if (!monomial.empty())
                body += "*" + monomial;
        }
    } else {
        body = "(" + c.str() + ")" + (monomial.empty() ? "" : "*" + monomial);
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

std::string t_power(int n)
{
    if (n == 0)
        return "";
    if (n == 1)
        return "t";
    return "t^" + std::to_string(n);
}

} // namespace

UnivariateSeries::UnivariateSeries(int order, int eps_order) : order_(order)
{
    if (order < 0)
        throw BadOrder("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Coefficient(eps_order));
}

UnivariateSeries UnivariateSeries::constant(const Coefficient& value, int order)
{
    UnivariateSeries s(order, value.eps_order());
    s.coeffs_[0] = value;
    return s;
}

UnivariateSeries UnivariateSeries::variable(int order, int eps_order)
{
    if (order < 1)
        throw BadOrder("the series t needs order at least 1");
    UnivariateSeries s(order, eps_order);
    s.coeffs_[1] = Coefficient::one(eps_order);
    return s;
}

const Coefficient& UnivariateSeries::coeff(int n) const
{
    if (n < 0 || n > order_)
        throw BadOrder("coefficient index outside the truncation order");
    return coeffs_[static_cast<std::size_t>(n)];
}

void UnivariateSeries::set_coeff(int n, const Coefficient& value)
{
    if (n < 0 || n > order_)
        throw BadOrder("coefficient index outside the truncation order");
    if (value.eps_order() != eps_order())
        throw OrderMismatch("coefficient of a different nilpotency order");
    coeffs_[static_cast<std::size_t>(n)] = value;
}

bool UnivariateSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Coefficient& c) { return c.is_zero(); });
}

bool UnivariateSeries::operator==(const UnivariateSeries& other) const
{
    return order_ == other.order_ && coeffs_ == other.coeffs_;
}

std::string UnivariateSeries::str() const
{
    std::ostringstream out;
    bool first = true;
    for (int n = 0; n <= order_; ++n) {
        if (coeffs_[static_cast<std::size_t>(n)].is_zero())
            continue;
        append_term(out, first, coeffs_[static_cast<std::size_t>(n)], t_power(n));
    }
    if (first)
        return "0";
    return out.str();
}

std::vector<std::string> UnivariateSeries::coeff_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.str());
    return out;
}

UnivariateSeries operator+(const UnivariateSeries& a, const UnivariateSeries& b)
{
    const int order = std::min(a.order(), b.order());
    UnivariateSeries out(order, a.eps_order());
    for (int n = 0; n <= order; ++n)
        out.set_coeff(n, a.coeff(n) + b.coeff(n));
    return out;
}

UnivariateSeries operator-(const UnivariateSeries& a, const UnivariateSeries& b)
{
    const int order = std::min(a.order(), b.order());
    UnivariateSeries out(order, a.eps_order());
    for (int n = 0; n <= order; ++n)
        out.set_coeff(n, a.coeff(n) - b.coeff(n));
    return out;
}

UnivariateSeries operator-(const UnivariateSeries& a)
{
    UnivariateSeries out(a.order(), a.eps_order());
    for (int n = 0; n <= a.order(); ++n)
        out.set_coeff(n, -a.coeff(n));
    return out;
}

UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b)
{
    return series_multiply(a, b);
}

UnivariateSeries scaled(const UnivariateSeries& a, const Coefficient& factor)
{
    UnivariateSeries out(a.order(), a.eps_order());
    for (int n = 0; n <= a.order(); ++n)
        out.set_coeff(n, a.coeff(n) * factor);
    return out;
}

UnivariateSeries truncated(const UnivariateSeries& a, int new_order)
{
    if (new_order > a.order())
        throw BadOrder("truncation cannot extend a series");
    UnivariateSeries out(new_order, a.eps_order());
    for (int n = 0; n <= new_order; ++n)
        out.set_coeff(n, a.coeff(n));
    return out;
}

UnivariateSeries series_multiply(const UnivariateSeries& a, const UnivariateSeries& b)
{
    const int order = std::min(a.order(), b.order());
    UnivariateSeries out(order, a.eps_order());
    for (int i = 0; i <= order; ++i) {
        if (a.coeff(i).is_zero())
            continue;
        for (int k = 0; i + k <= order; ++k) {
            if (b.coeff(k).is_zero())
                continue;
            out.set_coeff(i + k, out.coeff(i + k) + a.coeff(i) * b.coeff(k));
        }
    }
    return out;
}

UnivariateSeries series_compose(const UnivariateSeries& f, const UnivariateSeries& g)
{
    if (!g.coeff(0).is_zero())
        throw CompositionConstantTerm("composition requires g(0) = 0");
    const int order = std::min(f.order(), g.order());

    // Horner: terms of f beyond the order contribute only above it because
    // g has positive valuation.
    UnivariateSeries result = UnivariateSeries::constant(f.coeff(order), order);
    UnivariateSeries g_cut = truncated(g, order);
    for (int k = order - 1; k >= 0; --k) {
        result = series_multiply(result, g_cut);
        result.set_coeff(0, result.coeff(0) + f.coeff(k));
    }
    return result;
}

UnivariateSeries series_invert(const UnivariateSeries& f)
{
    if (!f.coeff(0).is_unit())
        throw NonUnit("series with non-unit constant term has no reciprocal");
    const int order = f.order();
    const Coefficient lead_inv = f.coeff(0).inverse();
    UnivariateSeries out(order, f.eps_order());
    out.set_coeff(0, lead_inv);
    for (int n = 1; n <= order; ++n) {
        Coefficient acc(f.eps_order());
        for (int k = 1; k <= n; ++k)
            acc += f.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, -(lead_inv * acc));
    }
    return out;
}

BivariateSeries::BivariateSeries(int order, int eps_order)
    : order_(order), eps_order_(eps_order)
{
    if (order < 0)
        throw BadOrder("series order must be nonnegative");
    if (eps_order < 1)
        throw BadParam("nilpotency order must be at least 1");
}

BivariateSeries BivariateSeries::variable_u(int order, int eps_order)
{
    BivariateSeries s(order, eps_order);
    s.set_coeff(1, 0, Coefficient::one(eps_order));
    return s;
}

BivariateSeries BivariateSeries::variable_v(int order, int eps_order)
{
    BivariateSeries s(order, eps_order);
    s.set_coeff(0, 1, Coefficient::one(eps_order));
    return s;
}

Coefficient BivariateSeries::coeff(int deg_u, int deg_v) const
{
    auto it = terms_.find({deg_u, deg_v});
    if (it == terms_.end())
        return Coefficient(eps_order_);
    return it->second;
}

void BivariateSeries::set_coeff(int deg_u, int deg_v, const Coefficient& value)
{
    if (deg_u < 0 || deg_v < 0 || deg_u + deg_v > order_)
        throw BadOrder("bivariate monomial outside the truncation order");
    if (value.eps_order() != eps_order_)
        throw OrderMismatch("coefficient of a different nilpotency order");
    if (value.is_zero())
        terms_.erase({deg_u, deg_v});
    else
        terms_.insert_or_assign({deg_u, deg_v}, value);
}

bool BivariateSeries::is_zero() const
{
    return terms_.empty();
}

bool BivariateSeries::operator==(const BivariateSeries& other) const
{
    return order_ == other.order_ && terms_ == other.terms_;
}

std::string BivariateSeries::str() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        std::string monomial;
        if (exp[0] == 1)
            monomial = "u";
        else if (exp[0] > 1)
            monomial = "u^" + std::to_string(exp[0]);
        if (exp[1] >= 1) {
            if (!monomial.empty())
                monomial += " ";
            monomial += exp[1] == 1 ? "v" : "v^" + std::to_string(exp[1]);
        }
        append_term(out, first, c, monomial);
    }
    if (first)
        return "0";
    return out.str();
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b)
{
    const int order = std::min(a.order(), b.order());
    BivariateSeries out(order, a.eps_order());
    for (const auto& [exp, c] : a.terms())
        if (exp[0] + exp[1] <= order)
            out.set_coeff(exp[0], exp[1], c);
    for (const auto& [exp, c] : b.terms())
        if (exp[0] + exp[1] <= order)
            out.set_coeff(exp[0], exp[1], out.coeff(exp[0], exp[1]) + c);
    return out;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b)
{
    const int order = std::min(a.order(), b.order());
    BivariateSeries out(order, a.eps_order());
    for (const auto& [exp, c] : a.terms())
        if (exp[0] + exp[1] <= order)
            out.set_coeff(exp[0], exp[1], c);
    for (const auto& [exp, c] : b.terms())
        if (exp[0] + exp[1] <= order)
            out.set_coeff(exp[0], exp[1], out.coeff(exp[0], exp[1]) - c);
    return out;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b)
{
    const int order = std::min(a.order(), b.order());
    BivariateSeries out(order, a.eps_order());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            const int du = ea[0] + eb[0];
            const int dv = ea[1] + eb[1];
            if (du + dv > order)
                continue;
            out.set_coeff(du, dv, out.coeff(du, dv) + ca * cb);
        }
    }
    return out;
}

BivariateSeries swap_variables(const BivariateSeries& f)
{
    BivariateSeries out(f.order(), f.eps_order());
    for (const auto& [exp, c] : f.terms())
        out.set_coeff(exp[1], exp[0], c);
    return out;
}

UnivariateSeries restrict_to_u(const BivariateSeries& f)
{
    UnivariateSeries out(f.order(), f.eps_order());
    for (const auto& [exp, c] : f.terms())
        if (exp[1] == 0)
            out.set_coeff(exp[0], c);
    return out;
}

BivariateSeries embed_u(const UnivariateSeries& F, int order)
{
    BivariateSeries out(order, F.eps_order());
    for (int n = 0; n <= std::min(order, F.order()); ++n)
        out.set_coeff(n, 0, F.coeff(n));
    return out;
}

BivariateSeries embed_v(const UnivariateSeries& F, int order)
{
    BivariateSeries out(order, F.eps_order());
    for (int n = 0; n <= std::min(order, F.order()); ++n)
        out.set_coeff(0, n, F.coeff(n));
    return out;
}

BivariateSeries substitute(const UnivariateSeries& F, const BivariateSeries& g)
{
    if (!g.coeff(0, 0).is_zero())
        throw CompositionConstantTerm("substitution requires g(0,0) = 0");
    const int order = std::min(F.order(), g.order());
    const int p = F.eps_order();

    BivariateSeries result(order, p);
    result.set_coeff(0, 0, F.coeff(0));
    BivariateSeries power(order, p);
    power.set_coeff(0, 0, Coefficient::one(p));
    for (int k = 1; k <= order; ++k) {
        power = power * g;
        if (F.coeff(k).is_zero())
            continue;
        for (const auto& [exp, c] : power.terms())
            result.set_coeff(exp[0], exp[1], result.coeff(exp[0], exp[1]) + F.coeff(k) * c);
    }
    return result;
}

namespace {

// Power series in three variables truncated at a total degree; used only to
// expand the two associativity nestings.
struct TrivariateSeries {
    int order;
    int eps_order;
    std::map<std::array<int, 3>, Coefficient> terms;

    TrivariateSeries(int order_in, int eps_in) : order(order_in), eps_order(eps_in) {}

    static TrivariateSeries variable(int slot, int order, int eps_order)
    {
        TrivariateSeries s(order, eps_order);
        std::array<int, 3> exp{0, 0, 0};
        exp[static_cast<std::size_t>(slot)] = 1;
        s.terms.emplace(exp, Coefficient::one(eps_order));
        return s;
    }

    void add_term(const std::array<int, 3>& exp, const Coefficient& c)
    {
        auto it = terms.find(exp);
        if (it == terms.end()) {
            if (!c.is_zero())
                terms.emplace(exp, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }

    bool is_zero() const { return terms.empty(); }

    std::string str() const
    {
        static const char* names[3] = {"u", "v", "w"};
        std::ostringstream out;
        bool first = true;
        for (const auto& [exp, c] : terms) {
            std::string monomial;
            for (int s = 0; s < 3; ++s) {
                if (exp[static_cast<std::size_t>(s)] == 0)
                    continue;
                if (!monomial.empty())
                    monomial += " ";
                monomial += names[s];
                if (exp[static_cast<std::size_t>(s)] > 1)
                    monomial += "^" + std::to_string(exp[static_cast<std::size_t>(s)]);
            }
            append_term(out, first, c, monomial);
        }
        if (first)
            return "0";
        return out.str();
    }
};

TrivariateSeries tri_multiply(const TrivariateSeries& a, const TrivariateSeries& b)
{
    TrivariateSeries out(std::min(a.order, b.order), a.eps_order);
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            std::array<int, 3> exp{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (exp[0] + exp[1] + exp[2] > out.order)
                continue;
            out.add_term(exp, ca * cb);
        }
    }
    return out;
}

TrivariateSeries tri_subtract(const TrivariateSeries& a, const TrivariateSeries& b)
{
    TrivariateSeries out = a;
    for (const auto& [exp, c] : b.terms)
        out.add_term(exp, -c);
    return out;
}

// Embeds a bivariate series with its variables placed at the given slots.
TrivariateSeries tri_embed(const BivariateSeries& f, int slot_u, int slot_v)
{
    TrivariateSeries out(f.order(), f.eps_order());
    for (const auto& [exp, c] : f.terms()) {
        std::array<int, 3> tri{0, 0, 0};
        tri[static_cast<std::size_t>(slot_u)] = exp[0];
        tri[static_cast<std::size_t>(slot_v)] = exp[1];
        out.add_term(tri, c);
    }
    return out;
}

// f(A, B) where A and B have zero constant term.
TrivariateSeries tri_substitute(const BivariateSeries& f, const TrivariateSeries& A,
                                const TrivariateSeries& B)
{
    const int order = f.order();
    const int p = f.eps_order();

    int max_u = 0;
    int max_v = 0;
    for (const auto& [exp, c] : f.terms()) {
        max_u = std::max(max_u, exp[0]);
        max_v = std::max(max_v, exp[1]);
    }

    std::vector<TrivariateSeries> pow_a;
    std::vector<TrivariateSeries> pow_b;
    TrivariateSeries unit(order, p);
    unit.add_term({0, 0, 0}, Coefficient::one(p));
    pow_a.push_back(unit);
    pow_b.push_back(unit);
    for (int k = 1; k <= max_u; ++k)
        pow_a.push_back(tri_multiply(pow_a.back(), A));
    for (int k = 1; k <= max_v; ++k)
        pow_b.push_back(tri_multiply(pow_b.back(), B));

    TrivariateSeries out(order, p);
    for (const auto& [exp, c] : f.terms()) {
        TrivariateSeries prod = tri_multiply(pow_a[static_cast<std::size_t>(exp[0])],
                                             pow_b[static_cast<std::size_t>(exp[1])]);
        for (const auto& [texp, tc] : prod.terms)
            out.add_term(texp, c * tc);
    }
    return out;
}

// f(a(t), b(t)) for univariate arguments with zero constant term.
UnivariateSeries evaluate_bivariate(const BivariateSeries& f, const UnivariateSeries& a,
                                    const UnivariateSeries& b)
{
    const int order = std::min({f.order(), a.order(), b.order()});
    const int p = f.eps_order();

    int max_u = 0;
    int max_v = 0;
    for (const auto& [exp, c] : f.terms()) {
        max_u = std::max(max_u, exp[0]);
        max_v = std::max(max_v, exp[1]);
    }

    UnivariateSeries one = UnivariateSeries::constant(Coefficient::one(p), order);
    std::vector<UnivariateSeries> pow_a{one};
    std::vector<UnivariateSeries> pow_b{one};
    UnivariateSeries a_cut = truncated(a, order);
    UnivariateSeries b_cut = truncated(b, order);
    for (int k = 1; k <= max_u; ++k)
        pow_a.push_back(series_multiply(pow_a.back(), a_cut));
    for (int k = 1; k <= max_v; ++k)
        pow_b.push_back(series_multiply(pow_b.back(), b_cut));

    UnivariateSeries out(order, p);
    for (const auto& [exp, c] : f.terms()) {
        UnivariateSeries prod = series_multiply(pow_a[static_cast<std::size_t>(exp[0])],
                                                pow_b[static_cast<std::size_t>(exp[1])]);
        out = out + scaled(prod, c);
    }
    return out;
}

// Solves f(u, o(u)) = 0 with o(0) = 0 by fixed-point refinement; each pass
// fixes at least one more degree because the nonlinear part of f has total
// degree two or more.
UnivariateSeries solve_opp(const BivariateSeries& f)
{
    const int order = f.order();
    const int p = f.eps_order();
    if (order < 1)
        throw SolveFailure("order too small for a formal inverse");
    if (!(f.coeff(0, 0).is_zero() && f.coeff(1, 0) == Coefficient::one(p) &&
          f.coeff(0, 1) == Coefficient::one(p)))
        throw SolveFailure("formal inverse needs linear part u + v");

    BivariateSeries nonlinear = f;
    nonlinear.set_coeff(1, 0, Coefficient(p));
    nonlinear.set_coeff(0, 1, Coefficient(p));

    UnivariateSeries t = UnivariateSeries::variable(order, p);
    UnivariateSeries o = -t;
    for (int pass = 0; pass < order; ++pass)
        o = -t - evaluate_bivariate(nonlinear, t, o);

    if (!evaluate_bivariate(f, t, o).is_zero())
        throw SolveFailure("no formal inverse at this order");
    return o;
}

} // namespace

GroupLaw GroupLaw::additive(int order, int eps_order)
{
    if (order < 1)
        throw BadOrder("a group law needs order at least 1");
    BivariateSeries f(order, eps_order);
    f.set_coeff(1, 0, Coefficient::one(eps_order));
    f.set_coeff(0, 1, Coefficient::one(eps_order));
    return GroupLaw{LawKind::Additive, f};
}

GroupLaw GroupLaw::multiplicative(int order, int eps_order)
{
    GroupLaw law = additive(order, eps_order);
    law.kind = LawKind::Multiplicative;
    if (order >= 2)
        law.law.set_coeff(1, 1, -Coefficient::one(eps_order));
    return law;
}

GroupLaw GroupLaw::custom(const BivariateSeries& candidate)
{
    VerificationReport report = check_group_law(candidate);
    if (!report.pass())
        throw BadParam("custom law fails the group-law axioms:\n" + report.to_text());
    return GroupLaw{LawKind::Custom, candidate};
}

UnivariateSeries opp_series(const GroupLaw& law)
{
    return solve_opp(law.law);
}

VerificationReport check_group_law(const BivariateSeries& candidate)
{
    const int order = candidate.order();
    const int p = candidate.eps_order();

    VerificationReport report;
    report.name = "group-law-check";
    report.params["order"] = std::to_string(order);
    report.params["eps_order"] = std::to_string(p);

    {
        BivariateSeries swapped = swap_variables(candidate);
        BivariateSeries residual = candidate - swapped;
        report.add_case("commutativity: f(u,v) = f(v,u)", candidate.str(), swapped.str(),
                        residual.str(), residual.is_zero());
    }

    {
        UnivariateSeries restricted = restrict_to_u(candidate);
        UnivariateSeries expected =
            order >= 1 ? UnivariateSeries::variable(order, p) : UnivariateSeries(order, p);
        UnivariateSeries residual = restricted - expected;
        report.add_case("unit: f(u,0) = u", restricted.str(), expected.str(), residual.str(),
                        residual.is_zero());
    }

    {
        TrivariateSeries u = TrivariateSeries::variable(0, order, p);
        TrivariateSeries w = TrivariateSeries::variable(2, order, p);
        TrivariateSeries inner_vw = tri_embed(candidate, 1, 2);
        TrivariateSeries inner_uv = tri_embed(candidate, 0, 1);
        TrivariateSeries lhs = tri_substitute(candidate, u, inner_vw);
        TrivariateSeries rhs = tri_substitute(candidate, inner_uv, w);
        TrivariateSeries residual = tri_subtract(lhs, rhs);
        report.add_case("associativity: f(u,f(v,w)) = f(f(u,v),w)", lhs.str(), rhs.str(),
                        residual.str(), residual.is_zero());
    }

    try {
        UnivariateSeries o = solve_opp(candidate);
        UnivariateSeries t = UnivariateSeries::variable(order, p);
        UnivariateSeries residual = evaluate_bivariate(candidate, t, o);
        report.add_case("inverse: f(u, opp(u)) = 0", "opp(u) = " + o.str(), "0",
                        residual.str(), residual.is_zero());
    } catch (const SolveFailure& failure) {
        report.add_case("inverse: f(u, opp(u)) = 0", "-", "0", failure.what(), false);
    }

    return report;
}

VerificationReport check_multiplicativity(const UnivariateSeries& F, const GroupLaw& law)
{
    const int order = std::min(F.order(), law.law.order());

    VerificationReport report;
    report.name = "multiplicativity-check";
    report.params["order"] = std::to_string(order);
    report.params["series"] = F.str();

    BivariateSeries lhs = substitute(F, law.law);
    BivariateSeries rhs = embed_u(F, order) * embed_v(F, order);
    BivariateSeries residual = rhs - lhs;
    report.add_case("F(f(u,v)) = F(u) F(v)", lhs.str(), rhs.str(), residual.str(),
                    residual.is_zero());
    return report;
}

UnivariateSeries builtin_series(SeriesName name, const SeriesParams& params, int order)
{
    switch (name) {
    case SeriesName::Bj:
        return bott_series(params.j, order, params.eps_order);
    case SeriesName::InvTodd:
        return inverse_todd_series(order, params.eps_order);
    case SeriesName::Sj:
        return scaled_inverse_todd_series(params.j, order, params.eps_order);
    case SeriesName::OneMinusTPow:
        return one_minus_t_pow(params.j, order, params.eps_order);
    case SeriesName::Exp:
        return exp_series(order, params.eps_order);
    case SeriesName::ExpEps:
        return exp_eps_series(order, params.eps_order);
    case SeriesName::Monomial:
        return monomial_series(params.m, order, params.eps_order);
    case SeriesName::TwistedInvTodd:
        return twisted_inverse_todd_series(order, params.eps_order);
    }
    throw BadParam("unknown builtin series");
}

UnivariateSeries bott_series(long j, int order, int eps_order)
{
    if (j == 0)
        throw BadParam("Bj needs j != 0");
    UnivariateSeries out(order, eps_order);
    for (int n = 0; n <= order; ++n) {
        Rational c(binomial(j, static_cast<unsigned long>(n) + 1));
        if (n % 2 == 1)
            c = -c;
        out.set_coeff(n, Coefficient::from_rational(c, eps_order));
    }
    return out;
}

UnivariateSeries inverse_todd_series(int order, int eps_order)
{
    UnivariateSeries out(order, eps_order);
    for (int n = 0; n <= order; ++n) {
        Rational c(1, factorial(static_cast<unsigned long>(n) + 1));
        c.canonicalize();
        if (n % 2 == 1)
            c = -c;
        out.set_coeff(n, Coefficient::from_rational(c, eps_order));
    }
    return out;
}

UnivariateSeries scaled_inverse_todd_series(long j, int order, int eps_order)
{
    if (j == 0)
        throw BadParam("Sj needs j != 0");
    UnivariateSeries out(order, eps_order);
    Integer jpow = j;
    for (int n = 0; n <= order; ++n) {
        Rational c(jpow, factorial(static_cast<unsigned long>(n) + 1));
        c.canonicalize();
        if (n % 2 == 1)
            c = -c;
        out.set_coeff(n, Coefficient::from_rational(c, eps_order));
        jpow *= j;
    }
    return out;
}

UnivariateSeries one_minus_t_pow(long j, int order, int eps_order)
{
    UnivariateSeries out(order, eps_order);
    for (int n = 0; n <= order; ++n) {
        Rational c(binomial(j, static_cast<unsigned long>(n)));
        if (n % 2 == 1)
            c = -c;
        out.set_coeff(n, Coefficient::from_rational(c, eps_order));
    }
    return out;
}

UnivariateSeries exp_series(int order, int eps_order)
{
    UnivariateSeries out(order, eps_order);
    for (int n = 0; n <= order; ++n) {
        Rational c(1, factorial(static_cast<unsigned long>(n)));
        c.canonicalize();
        out.set_coeff(n, Coefficient::from_rational(c, eps_order));
    }
    return out;
}

UnivariateSeries exp_eps_series(int order, int eps_order)
{
    if (eps_order < 2)
        throw BadParam("the twisted exponential needs nilpotency order at least 2");
    UnivariateSeries out(order, eps_order);
    for (int n = 0; n <= order; ++n) {
        Coefficient c(eps_order);
        if (n < eps_order) {
            Rational q(1, factorial(static_cast<unsigned long>(n)));
            q.canonicalize();
            c.set_part(n, q);
        }
        out.set_coeff(n, c);
    }
    return out;
}

UnivariateSeries monomial_series(long m, int order, int eps_order)
{
    if (m < 1)
        throw BadParam("Monomial needs m >= 1");
    UnivariateSeries out(order, eps_order);
    if (m - 1 <= order) {
        Coefficient c = Coefficient::from_integer((m - 1) % 2 == 0 ? 1 : -1, eps_order);
        out.set_coeff(static_cast<int>(m) - 1, c);
    }
    return out;
}

UnivariateSeries twisted_inverse_todd_series(int order, int eps_order)
{
    if (eps_order < 2)
        throw BadParam("the twisted series needs nilpotency order at least 2");
    UnivariateSeries out(order, eps_order);
    for (int n = 0; n <= order; ++n) {
        Coefficient c(eps_order);
        if (n + 1 < eps_order) {
            Rational q(1, factorial(static_cast<unsigned long>(n) + 1));
            q.canonicalize();
            if (n % 2 == 1)
                q = -q;
            c.set_part(n + 1, q);
        }
        out.set_coeff(n, c);
    }
    return out;
}

UnivariateSeries geometric_series(int order, int eps_order)
{
    UnivariateSeries out(order, eps_order);
    for (int n = 0; n <= order; ++n)
        out.set_coeff(n, Coefficient::one(eps_order));
    return out;
}

} // namespace rroch
