#pragma once

#include <stdexcept>
#include <string>

namespace citsdid {

// Data fails an invariant or a design's data requirements (CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration: t0 out of range, unknown design, incompatible options
// (CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem or parse failures (CLI exit code 2).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace citsdid
