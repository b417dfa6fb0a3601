#pragma once

#include <map>
#include <string>
#include <vector>

#include "rroch/coeff.hpp"

namespace rroch {

/// One checked identity: the two sides, their difference, and the verdict.
/// The check passes only when the residual is exactly zero.
struct CaseResult {
    std::string input;
    std::string lhs;
    std::string rhs;
    std::string residual;
    bool pass = false;
};

/// Integrality classification of one coefficient of a correction class.
struct IntegralityRecord {
    std::string context;
    IntegralityVerdict verdict = IntegralityVerdict::Rational;
    std::string denominator;
};

/// Outcome of a verification run. `pass` is true exactly when every case
/// passed; construction is deterministic, so two runs on the same input
/// produce identical reports.
struct VerificationReport {
    std::string name;
    std::map<std::string, std::string> params;
    std::vector<CaseResult> cases;
    std::vector<IntegralityRecord> integrality;

    bool pass() const;
    /// True when every integrality record is Integer or JLocal.
    bool integrality_pass() const;

    void add_case(std::string input, std::string lhs, std::string rhs,
                  std::string residual, bool ok);

    /// Full machine-readable form; both sides of every case are included.
    std::string to_json() const;
    /// Human-readable form; residuals are printed only for failing cases.
    std::string to_text() const;
};

} // namespace rroch
