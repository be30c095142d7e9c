#pragma once

#include <ostream>

namespace sigmaconic::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kViolation = 3;
inline constexpr int kResourceCap = 4;

// Entry point shared by the executable and the tests. Reports go to `out`
// unless --out is given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigmaconic::cli
