#ifndef EQPARSE_CLI_COMMANDS_H_
#define EQPARSE_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace eqparse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one command line (without the program name). JSON results go to
// `out`, diagnostics to `err`; `in` feeds `parse --input -`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace eqparse::cli

#endif  // EQPARSE_CLI_COMMANDS_H_
