#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semloc {

/// Raised for malformed or infeasible configuration values.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for unreadable, truncated, or inconsistent data files.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical contract is violated (non-finite values,
/// near-singular rotations, points behind the camera, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance id reserved for "no instance" (background) in id maps.
inline constexpr std::uint16_t kNoInstance = 0xFFFF;

}  // namespace semloc
