#pragma once

#include <stdexcept>

namespace llt {

/// Malformed or inconsistent input (bad file, metric axiom violation, ...).
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration was requested beyond its configured cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace llt
