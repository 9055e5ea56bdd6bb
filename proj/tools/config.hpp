// key=value settings file, read only from an explicit path.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colombeau/rational.hpp"

namespace colombeau::cli {

struct Config {
  std::optional<Rational> default_window;
  std::optional<std::vector<Rational>> verify_n_list;
};

/// Blank lines and '#' comments are skipped. Throws std::invalid_argument on
/// unknown keys or malformed values.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);

/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace colombeau::cli
