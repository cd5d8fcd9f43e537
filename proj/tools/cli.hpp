#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polychi::cli {

// Exit codes of the polychi tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerificationFailed = 3;

// args excludes the program name. Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Decimal literal or one of the tokens x0 / x1. Throws std::invalid_argument.
double parse_alpha(const std::string& text);

}  // namespace polychi::cli
