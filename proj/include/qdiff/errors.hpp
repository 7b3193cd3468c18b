#pragma once

#include <stdexcept>
#include <string>

namespace qdiff {

// Invalid user-facing input: bad parameter values, malformed configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed to converge or produced an unusable result.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Inputs are outside the validity region of the requested formula.
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdiff
