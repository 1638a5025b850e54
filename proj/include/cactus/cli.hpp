#pragma once

#include <ostream>
#include <span>
#include <string>

namespace cactus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResourceLimit = 2;
inline constexpr int kExitRefuted = 3;

/// Runs one command. args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cactus::cli
