#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace retell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// args excludes the program name. Subcommands: validate, generate, eval,
// pipeline.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace retell::cli
