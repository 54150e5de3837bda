#pragma once

#include <stdexcept>
#include <string>

namespace vitushkin {

/// Malformed input: bad dimensions, out-of-range parameters, schema violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A function was evaluated outside the set where it is defined (Laurent poles).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace vitushkin
