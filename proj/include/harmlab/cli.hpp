#pragma once

#include <iosfwd>

namespace harmlab::cli {

/// Exit codes: 0 success, 2 invalid input, 3 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

int run(int argc, char** argv);

/// Same, writing to the given streams instead of stdout / stderr.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace harmlab::cli
