#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hgx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // absent, bound satisfied, or a failed check
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitIntegrity = 4;

/// Entry point of the hgx tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgx::cli
