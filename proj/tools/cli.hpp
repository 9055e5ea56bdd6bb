// Command-line front end, callable in-process.
#pragma once

#include <string>
#include <vector>

namespace colombeau::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

struct Outcome {
  int exit_code;
  std::string out;
  std::string err;
};

/// Arguments exclude the program name.
Outcome run(const std::vector<std::string>& args);

/// Splits at sep outside (), [] and {}.
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace colombeau::cli
