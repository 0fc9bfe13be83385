#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scp::cli {

// Exit statuses shared by all commands.
inline constexpr int kStatusOk = 0;           // feasible / verified
inline constexpr int kStatusInfeasible = 1;
inline constexpr int kStatusInputError = 2;
inline constexpr int kStatusBudgetExhausted = 3;

// Runs one command. JSON report on `out`, human diagnostics on `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace scp::cli
