#pragma once

#include <stdexcept>
#include <string>

namespace aligndet {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

struct EmptyBoxError : Error {
  explicit EmptyBoxError(const std::string& msg) : Error(msg) {}
};

struct NormalizationError : Error {
  explicit NormalizationError(const std::string& msg) : Error(msg) {}
};

}  // namespace aligndet
