#pragma once

#include <stdexcept>
#include <string>

namespace fricke {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or automorphism input text.
class parse_error : public error {
 public:
  using error::error;
};

/// A constructor or operation precondition was violated.
class validation_error : public error {
 public:
  using error::error;
};

/// The chosen prime is too small: projective test points collide mod p.
/// Callers are expected to retry with a larger prime.
class prime_too_small : public error {
 public:
  using error::error;
};

/// The basis matrix S is degenerate: projective test points already
/// collide over the rationals, so no prime can work.
class bad_basis : public error {
 public:
  using error::error;
};

/// An iterative numeric routine failed to converge within its cap.
class convergence_error : public error {
 public:
  using error::error;
};

}  // namespace fricke
