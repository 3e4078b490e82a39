#ifndef FREEKNOT_CLI_HPP
#define FREEKNOT_CLI_HPP

#include <iosfwd>

namespace freeknot::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;  // "different" / refusal / usage error
inline constexpr int kExitParse = 2;
inline constexpr int kExitComponents = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitViolation = 5;

// Budget overrides read when no flag is given.
inline constexpr const char* kBracketBudgetEnv = "FREEKNOT_BRACKET_BUDGET";
inline constexpr const char* kCensusLimitEnv = "FREEKNOT_CENSUS_LIMIT";

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace freeknot::cli

#endif  // FREEKNOT_CLI_HPP
