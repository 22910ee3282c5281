#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace springer {

// Exit codes returned by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer
