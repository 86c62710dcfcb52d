#pragma once

#include <iosfwd>

namespace basislex::cli {

// Exit codes: 0 success, 1 validation or convergence-check failure,
// 2 I/O or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace basislex::cli
