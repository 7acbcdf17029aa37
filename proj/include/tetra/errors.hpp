#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

// Precondition or index-set violation on a mathematical operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A 3-adic digit needed to decide a result is below the working precision.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iteration cap or internal consistency bound was hit.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closure or enumeration grew past its caller-supplied cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tetra
