#pragma once

#include <stdexcept>
#include <string>

namespace ctam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input (files, field strings, labels).
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (field too small, inadmissible
// diagram, singular matrix, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search or closure ran past its element/assignment cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ctam
