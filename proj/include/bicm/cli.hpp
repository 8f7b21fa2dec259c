#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace bicm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitNotFoo = 3;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// (or to the files named by --out), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace bicm::cli
