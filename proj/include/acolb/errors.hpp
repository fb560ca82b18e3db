#pragma once

#include <stdexcept>

namespace acolb {

// Invalid configuration (bad key, out-of-range value, malformed file).
// The CLI maps this to exit code 1; other failures exit with 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace acolb
