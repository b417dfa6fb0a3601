#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rroch/classes.hpp"
#include "rroch/model.hpp"

namespace rroch {

/// Parses the CLI transformation tokens: "psi:J", "ch", "ch-eps:P", "id".
/// BadParam on anything else.
Transformation parse_transformation(const std::string& text);

/// Parses "d1,d2,..." (nonnegative dimensions) or "pt". BadParam on
/// malformed input or spaces too large for an interactive run.
Space parse_space(const std::string& text);

/// Entry point of the command line tool, factored out so tests can drive it
/// directly. Returns the exit code: 0 when every check passed, 1 when a
/// verification ran and failed, 2 for usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rroch
