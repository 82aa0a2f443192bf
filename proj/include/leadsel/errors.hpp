#pragma once

#include <stdexcept>
#include <string>

namespace leadsel {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad node counts, variances, leader sets, k, etc.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A tridiagonal or dense factorization met a non-positive pivot.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

// No s->t path within the hop budget.
class NoPath : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the search space is too big.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Simulation time step violates the explicit-Euler stability bound.
class UnstableStep : public Error {
 public:
  UnstableStep(const std::string& what, double suggested_dt)
      : Error(what), suggested_dt_(suggested_dt) {}
  double suggested_dt() const { return suggested_dt_; }

 private:
  double suggested_dt_;
};

// Formation offsets admit no equilibrium (ring does not close, or leader
// reference values disagree with the offsets).
class InconsistentOffsets : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace leadsel
