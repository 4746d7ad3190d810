#pragma once

#include <stdexcept>
#include <string>

namespace enfn {

/// Structural parameters that cannot describe a valid model, grid or experiment.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Vector or index dimensions that do not match the model layout.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Data values rejected at the boundary (non-finite samples, empty datasets).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace enfn
