#include "config.hpp"

#include <boost/algorithm/string.hpp>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "colombeau/error.hpp"

namespace colombeau::cli {

namespace {

Rational rational_value(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<std::string> items;
  boost::split(items, text, boost::is_any_of(","));
  std::vector<Rational> out;
  for (auto& item : items) {
    boost::trim(item);
    out.push_back(rational_value(item));
  }
  return out;
}

Config parse_config(std::string_view text) {
  Config cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    boost::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key=value");
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    boost::trim(key);
    boost::trim(value);
    if (key == "default_window") {
      cfg.default_window = rational_value(value);
    } else if (key == "verify_n_list") {
      cfg.verify_n_list = parse_rational_list(value);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace colombeau::cli
