#pragma once

#include <stdexcept>
#include <string>

namespace anderson {

// Error categories map onto distinct CLI exit codes (see experiments.hpp).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionCapError : std::runtime_error {
  explicit DimensionCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace anderson
