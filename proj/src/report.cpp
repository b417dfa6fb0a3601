#include "rroch/report.hpp"

#include <sstream>

#include <json.hpp>

namespace rroch {

bool VerificationReport::pass() const
{
    for (const auto& c : cases)
        if (!c.pass)
            return false;
    return integrality_pass();
}

bool VerificationReport::integrality_pass() const
{
    for (const auto& rec : integrality)
        if (rec.verdict == IntegralityVerdict::Rational)
            return false;
    return true;
}

void VerificationReport::add_case(std::string input, std::string lhs, std::string rhs,
                                  std::string residual, bool ok)
{
    cases.push_back(CaseResult{std::move(input), std::move(lhs), std::move(rhs),
                               std::move(residual), ok});
}

std::string VerificationReport::to_json() const
{
    nlohmann::json j;
    j["name"] = name;
    j["params"] = nlohmann::json::object();
    for (const auto& [key, value] : params)
        j["params"][key] = value;
    j["cases"] = nlohmann::json::array();
    for (const auto& c : cases) {
        j["cases"].push_back({{"input", c.input},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"residual", c.residual},
                              {"pass", c.pass}});
    }
    j["integrality"] = nlohmann::json::array();
    for (const auto& rec : integrality) {
        j["integrality"].push_back({{"context", rec.context},
                                    {"verdict", to_string(rec.verdict)},
                                    {"denominator", rec.denominator}});
    }
    j["pass"] = pass();
    return j.dump();
}

std::string VerificationReport::to_text() const
{
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& c : cases)
        if (!c.pass)
            ++failed;

    out << name;
    if (!params.empty()) {
        out << " [";
        bool first = true;
        for (const auto& [key, value] : params) {
            if (!first)
                out << ", ";
            out << key << "=" << value;
            first = false;
        }
        out << "]";
    }
    out << ": " << (pass() ? "PASS" : "FAIL") << " (" << cases.size() << " cases";
    if (failed > 0)
        out << ", " << failed << " failed";
    out << ")\n";

    for (const auto& c : cases) {
        if (c.pass)
            continue;
        out << "  FAIL " << c.input << "\n";
        out << "    lhs      = " << c.lhs << "\n";
        out << "    rhs      = " << c.rhs << "\n";
        out << "    residual = " << c.residual << "\n";
    }

    std::size_t bad_integrality = 0;
    for (const auto& rec : integrality)
        if (rec.verdict == IntegralityVerdict::Rational)
            ++bad_integrality;
    if (!integrality.empty()) {
        out << "  integrality: " << integrality.size() << " coefficients, "
            << bad_integrality << " outside the certified class\n";
        for (const auto& rec : integrality) {
            if (rec.verdict != IntegralityVerdict::Rational)
                continue;
            out << "    " << rec.context << ": denominator " << rec.denominator << "\n";
        }
    }
    return out.str();
}

} // namespace rroch
