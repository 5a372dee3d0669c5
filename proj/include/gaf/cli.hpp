#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;  // invalid (validate) or not isomorphic (iso)
inline constexpr int kExitError = 2;

/// Runs one invocation. `args` excludes the program name. Nothing is written
/// to `out` when the exit code is 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaf::cli
