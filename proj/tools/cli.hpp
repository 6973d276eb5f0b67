#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gnslab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point of the `gnslab` tool. `args` excludes the program name.
/// Returns 0 on success, 1 on usage/parse/validation errors and 2 on
/// runtime failures; diagnostics go to `err`.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gnslab::cli
