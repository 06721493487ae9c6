#pragma once

#include <stdexcept>
#include <string>

namespace asrt {

/// Base of every error thrown by the library. The CLI maps all of these to
/// exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed an argument the operation is not defined for
/// (bad sieve limit, undersized sieve for a table, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Argument lies outside the precomputed sieve or table.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Argument is in range but outside the mathematical domain of the claim
/// (n < 2 for inclusion-exclusion, prime n for the composite bound, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Result would exceed a configured item or node cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed cache or input file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace asrt
