#pragma once

#include <stdexcept>

namespace ghostsim {

/// Field passed to an operation expecting the other domain (position vs momentum).
struct DomainMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid parameter or inconsistent component configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Estimator asked to finalize with too few shots.
struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Correlation coefficient requested where a variance vanishes.
struct UndefinedCorrelationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ghostsim
