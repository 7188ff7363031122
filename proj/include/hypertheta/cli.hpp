#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypertheta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitSolverFailure = 3;

/// Runs one subcommand; JSON goes to `out`, errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

struct CheckOutcome {
    std::string module;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The property suite behind `check`: seeded random instances and exact
/// identities for every module.
std::vector<CheckOutcome> run_property_checks(unsigned long long seed);

}  // namespace hypertheta::cli
