#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace colorlie::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_verification_mismatch = 3;

/// Runs one command line (without the program name). Reads coefficient
/// lists from `in` when no --coeffs flag is given.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace colorlie::cli
