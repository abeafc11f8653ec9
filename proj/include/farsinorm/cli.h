#ifndef FARSINORM_CLI_H_
#define FARSINORM_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace farsinorm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

/// Entry point of the farsinorm tool. `args` excludes the program name.
/// Standard input and output are taken from `in`, `out` and `err` so the
/// tool can be driven from tests.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace farsinorm

#endif  // FARSINORM_CLI_H_
