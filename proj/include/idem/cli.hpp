#pragma once

#include "idem/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace idem::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolver = 1;
inline constexpr int kExitInput = 2;

/// 1 for failures of a well-formed problem (divergence, no path, …),
/// 2 for parse, configuration and domain errors.
int exit_code_for(ErrorKind kind);

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` (or the file named by --output); a single diagnostic line
/// `error: <Variant>: <detail>` goes to `err` on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idem::cli
