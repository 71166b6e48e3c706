#pragma once

#include <stdexcept>

namespace nqp {

/// Malformed or missing input data (files, datasets).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical routine produced an inconsistent result (e.g. a variance
/// estimate negative beyond the roundoff clamp).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nqp
