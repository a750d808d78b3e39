#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvm {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gvm
