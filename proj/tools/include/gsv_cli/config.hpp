#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "gsv/group.hpp"
#include "gsv/verma.hpp"

namespace gsv::cli {

/// Problems with a config file; carries the 1-based line when there is one.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg, const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ": ") +
                           (line > 0 ? "line " + std::to_string(line) + ": " : "") + msg),
        line_(line),
        msg_(msg) {}
  int line() const { return line_; }
  const std::string& message() const { return msg_; }

 private:
  int line_;
  std::string msg_;
};

struct Config {
  GroupPresentation group = standard_group();
  HighestWeight hw;
  std::optional<Truncation> trunc;
  std::uint64_t seed = 0;
};

/// Flat sectioned key = value format:
///
///   seed = 0
///   [algebra]  g = 1   primes = 3, 5   m = 1
///   [order]    direction = natural | reversed
///   [module]   c = 1   h = 0
///   [trunc]    max_depth = 3   lattice = 3:2, 5:1
///
/// '#' and ';' start comments. Throws ConfigError.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

}  // namespace gsv::cli
