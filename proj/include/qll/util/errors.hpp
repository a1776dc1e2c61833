#pragma once

#include <stdexcept>
#include <string>

namespace qll {

/// Invalid configuration or violated precondition (distinct from a failed check).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qll
