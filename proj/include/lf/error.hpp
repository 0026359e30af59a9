#pragma once

#include <stdexcept>

namespace lf {

/// Raised when a result that must hold for valid input does not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lf
