#pragma once

#include <stdexcept>
#include <string>

namespace hkchi {

// Root of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or out-of-domain input. The CLI maps this family to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

// Table shape is wrong (even side, non-square, n = 0). Distinct from a
// failed validation of a well-shaped table.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class DeterminantError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownManifoldError : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedError : public InputError {
 public:
  using InputError::InputError;
};

// h^{p,q} - h^{p-2,q} < 0: the table violates the holomorphic-symplectic
// Lefschetz decomposition and cannot come from a hyper-Kaehler manifold.
class NegativePrimitiveError : public InputError {
 public:
  NegativePrimitiveError(int p, int q)
      : InputError("NEGATIVE_PRIMITIVE(" + std::to_string(p) + "," + std::to_string(q) +
                   "): h^{p,q} - h^{p-2,q} < 0"),
        p_(p),
        q_(q) {}

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

 private:
  int p_;
  int q_;
};

// Two routes that must agree did not. Always a bug, never bad data.
// The CLI maps this to exit code 3.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hkchi
