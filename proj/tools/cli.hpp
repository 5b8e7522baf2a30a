#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slicekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

/// Runs one command line (without the program name). Results go to `out` or
/// the --out file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicekit::cli
