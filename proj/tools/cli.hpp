/**
 * @file cli.hpp
 * @brief The uqslcat command-line front end as a callable function.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "uqsl/qmodule.hpp"

namespace uqslcat {

/// Exit codes: success, domain error (bad input or ranges), classification failure.
enum ExitCode { kOk = 0, kDomainError = 1, kClassificationFailure = 2 };

/**
 * Parses a field element of Q(q), q = exp(i pi / p): a sum of terms c, c q or
 * c q^k with integer c and k, e.g. "1", "-q", "2+3q^2", "q^-1".
 */
uqsl::CycNum parse_field_element(const std::string& text, int p);

/// A module given on the command line.
struct ModuleArg {
    bool regular = false;  ///< "Reg", the left regular module
    uqsl::ModuleLabel label;
};

/**
 * Parses X+:s, W-:s:n, M+:s:n, O+:s:n:z1/z2, P+:s or Reg and validates the
 * ranges for the given p. Throws std::domain_error naming the violated condition.
 */
ModuleArg parse_module(const std::string& text, int p);

/// Runs one command line; the report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uqslcat
