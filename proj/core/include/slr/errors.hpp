#pragma once

#include <stdexcept>
#include <string>

namespace slr {

// Domain violations in physical inputs (non-positive frequency, inverted
// populations, zero displacement through the Green's tensor, ...).
struct physics_error : std::runtime_error {
  explicit physics_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent scenario configuration.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failures while writing results.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace slr
