#include "rroch/coeff.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace rroch {

namespace {

const Rational kZero = 0;

std::string rational_str(const Rational& q)
{
    return q.get_str();
}

} // namespace

Coefficient::Coefficient(int eps_order)
{
    if (eps_order < 1)
        throw BadParam("nilpotency order must be at least 1");
    parts_.assign(static_cast<std::size_t>(eps_order), Rational(0));
}

Coefficient Coefficient::from_rational(const Rational& value, int eps_order)
{
    Coefficient c(eps_order);
    c.parts_[0] = value;
    return c;
}

Coefficient Coefficient::from_integer(long value, int eps_order)
{
    return from_rational(Rational(value), eps_order);
}

Coefficient Coefficient::one(int eps_order)
{
    return from_integer(1, eps_order);
}

Coefficient Coefficient::eps(int eps_order)
{
    if (eps_order < 2)
        throw BadParam("the nilpotent generator needs order at least 2");
    Coefficient c(eps_order);
    c.parts_[1] = 1;
    return c;
}

const Rational& Coefficient::part(int k) const
{
    if (k < 0)
        throw BadParam("negative part index");
    if (k >= eps_order())
        return kZero;
    return parts_[static_cast<std::size_t>(k)];
}

void Coefficient::set_part(int k, const Rational& value)
{
    if (k < 0 || k >= eps_order())
        throw BadParam("part index outside nilpotency order");
    parts_[static_cast<std::size_t>(k)] = value;
}

bool Coefficient::is_zero() const
{
    for (const auto& q : parts_)
        if (q != 0)
            return false;
    return true;
}

bool Coefficient::is_unit() const
{
    return parts_[0] != 0;
}

bool Coefficient::is_plain_rational() const
{
    for (std::size_t k = 1; k < parts_.size(); ++k)
        if (parts_[k] != 0)
            return false;
    return true;
}

void Coefficient::require_same_order(const Coefficient& other) const
{
    if (eps_order() != other.eps_order())
        throw OrderMismatch("coefficients of different nilpotency orders mixed");
}

Coefficient Coefficient::operator-() const
{
    Coefficient out(*this);
    for (auto& q : out.parts_)
        q = -q;
    return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& other)
{
    require_same_order(other);
    for (std::size_t k = 0; k < parts_.size(); ++k)
        parts_[k] += other.parts_[k];
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other)
{
    require_same_order(other);
    for (std::size_t k = 0; k < parts_.size(); ++k)
        parts_[k] -= other.parts_[k];
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& other)
{
    require_same_order(other);
    const std::size_t p = parts_.size();
    std::vector<Rational> out(p, Rational(0));
    for (std::size_t a = 0; a < p; ++a) {
        if (parts_[a] == 0)
            continue;
        for (std::size_t b = 0; a + b < p; ++b) {
            if (other.parts_[b] == 0)
                continue;
            out[a + b] += parts_[a] * other.parts_[b];
        }
    }
    parts_ = std::move(out);
    return *this;
}

Coefficient Coefficient::scaled(const Rational& factor) const
{
    Coefficient out(*this);
    for (auto& q : out.parts_)
        q *= factor;
    return out;
}

Coefficient Coefficient::inverse() const
{
    if (!is_unit())
        throw NonUnit("coefficient with zero constant part has no inverse");
    const int p = eps_order();
    const Rational lead = parts_[0];

    // c = lead * (1 + n) with n nilpotent, so 1/c = (1/lead) * sum (-n)^k.
    Coefficient n(p);
    for (int k = 1; k < p; ++k)
        n.parts_[static_cast<std::size_t>(k)] = parts_[static_cast<std::size_t>(k)] / lead;

    Coefficient acc = one(p);
    Coefficient out = one(p);
    for (int k = 1; k < p; ++k) {
        acc *= n;
        if (k % 2 == 0)
            out += acc;
        else
            out -= acc;
    }
    return out.scaled(1 / lead);
}

Coefficient Coefficient::pow(long exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    Coefficient base(*this);
    Coefficient out = one(eps_order());
    long e = exponent;
    while (e > 0) {
        if (e & 1)
            out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

bool Coefficient::operator==(const Coefficient& other) const
{
    if (eps_order() != other.eps_order())
        return false;
    for (std::size_t k = 0; k < parts_.size(); ++k)
        if (parts_[k] != other.parts_[k])
            return false;
    return true;
}

std::string Coefficient::str() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        const Rational& q = parts_[k];
        if (q == 0)
            continue;
        Rational mag = q;
        if (first) {
            if (q < 0) {
                out << "-";
                mag = -q;
            }
            first = false;
        } else {
            if (q < 0) {
                out << " - ";
                mag = -q;
            } else {
                out << " + ";
            }
        }
        if (k == 0) {
            out << rational_str(mag);
        } else {
            out << rational_str(mag) << "*e";
            if (k > 1)
                out << "^" << k;
        }
    }
    if (first)
        return "0";
    return out.str();
}

IntegralityProfile integrality_profile(const Coefficient& value, long j)
{
    if (value.eps_order() != 1)
        throw OrderMismatch("integrality analysis is defined for plain rationals");
    Integer den = value.part(0).get_den();
    IntegralityProfile out{IntegralityVerdict::Rational, den};
    if (den == 1) {
        out.verdict = IntegralityVerdict::Integer;
        return out;
    }
    if (j == 0)
        return out;

    // Strip every prime factor shared with j; JLocal iff nothing remains.
    Integer rest = den;
    Integer jj = j < 0 ? Integer(-j) : Integer(j);
    for (;;) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), jj.get_mpz_t());
        if (g == 1)
            break;
        while (mpz_divisible_p(rest.get_mpz_t(), g.get_mpz_t()))
            rest /= g;
    }
    if (rest == 1)
        out.verdict = IntegralityVerdict::JLocal;
    return out;
}

std::string to_string(IntegralityVerdict verdict)
{
    switch (verdict) {
    case IntegralityVerdict::Integer: return "INTEGER";
    case IntegralityVerdict::JLocal: return "J_LOCAL";
    case IntegralityVerdict::Rational: return "RATIONAL";
    }
    return "RATIONAL";
}

namespace {

// One summand of a coefficient string: rational part and an optional e-power.
struct ParsedTerm {
    Rational value;
    int eps_power = 0;
};

ParsedTerm parse_term(const std::string& text)
{
    ParsedTerm term;
    std::string body = text;
    int power = 0;

    auto star = body.find('*');
    std::string rational_part;
    std::string eps_part;
    if (star != std::string::npos) {
        rational_part = body.substr(0, star);
        eps_part = body.substr(star + 1);
    } else if (!body.empty() && body[0] == 'e') {
        rational_part = "1";
        eps_part = body;
    } else {
        rational_part = body;
    }

    if (!eps_part.empty()) {
        if (eps_part[0] != 'e')
            throw BadParam("malformed coefficient term: " + text);
        if (eps_part.size() == 1) {
            power = 1;
        } else {
            if (eps_part[1] != '^')
                throw BadParam("malformed coefficient term: " + text);
            power = std::atoi(eps_part.c_str() + 2);
            if (power < 1)
                throw BadParam("malformed e-power in: " + text);
        }
    }

    if (rational_part.empty())
        throw BadParam("empty rational in coefficient term");
    try {
        term.value = Rational(rational_part);
    } catch (const std::invalid_argument&) {
        throw BadParam("malformed rational: " + rational_part);
    }
    if (term.value.get_den() == 0)
        throw BadParam("zero denominator in: " + rational_part);
    term.value.canonicalize();
    term.eps_power = power;
    return term;
}

} // namespace

Coefficient parse_coefficient(const std::string& text, int eps_order)
{
    Coefficient out(eps_order);
    std::string stripped;
    stripped.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            stripped.push_back(ch);
    if (stripped.empty())
        throw BadParam("empty coefficient string");

    std::size_t pos = 0;
    bool negative = false;
    if (stripped[0] == '+' || stripped[0] == '-') {
        negative = stripped[0] == '-';
        pos = 1;
    }
    while (pos < stripped.size()) {
        std::size_t end = pos;
        while (end < stripped.size() && stripped[end] != '+' && stripped[end] != '-')
            ++end;
        ParsedTerm term = parse_term(stripped.substr(pos, end - pos));
        if (negative)
            term.value = -term.value;
        if (term.eps_power >= eps_order) {
            if (term.value != 0)
                throw BadParam("e-power exceeds nilpotency order in: " + text);
        } else {
            out.set_part(term.eps_power, out.part(term.eps_power) + term.value);
        }
        if (end == stripped.size())
            break;
        negative = stripped[end] == '-';
        pos = end + 1;
    }
    return out;
}

Integer binomial(long n, unsigned long k)
{
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), Integer(n).get_mpz_t(), k);
    return out;
}

Integer factorial(unsigned long k)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

} // namespace rroch
