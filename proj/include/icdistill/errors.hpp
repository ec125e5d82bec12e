#pragma once

#include <stdexcept>
#include <string>

namespace icdistill {

// Bad config files, bad CLI usage, malformed input data. CLI maps these to exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values, diverged optimization, undefined metrics. CLI maps these to exit 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace icdistill
