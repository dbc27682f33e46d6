#pragma once

#include <iosfwd>

namespace kpspan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

/// Runs the kpspan command line. Output that is not redirected to a file goes
/// to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kpspan::cli
