#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace z4rm::cli {

enum ExitCode : int {
    kPass = 0,
    kFail = 1,  // claim failure or absence
    kUsage = 2,
    kBudget = 3,
};

// Environment variable holding the default enumeration budget.
inline constexpr const char* kBudgetEnv = "Z4RM_BUDGET";
// Environment variable holding the default worker count (0 = all cores).
inline constexpr const char* kWorkersEnv = "Z4RM_WORKERS";

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z4rm::cli
