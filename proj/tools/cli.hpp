#ifndef INVPAT_TOOLS_CLI_HPP
#define INVPAT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace invpat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest n enumerated by brute force unless --force is given.
inline constexpr int kBruteCeiling = 11;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace invpat::cli

#endif // INVPAT_TOOLS_CLI_HPP
