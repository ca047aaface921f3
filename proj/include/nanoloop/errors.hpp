// Copyright 2026 the nanoloop developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace nanoloop {

/// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A physical parameter violates its domain (sign, ordering, range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the supported evaluation range of a special function.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Non-finite input where a finite real is required.
class NaNError : public Error {
 public:
  using Error::Error;
};

/// Coefficient recovery requested at a point where the determinant is not zero.
class NotASolutionError : public Error {
 public:
  using Error::Error;
};

/// A printed closed form is indeterminate at this point (e.g. cos(ka) = 0).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Every candidate row subsystem for coefficient recovery was singular.
class DegenerateSystemError : public Error {
 public:
  using Error::Error;
};

/// tan(ka) pole: no finite solution off the ka = n*pi family.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Bisection was handed an interval without a sign change.
class NoBracketError : public Error {
 public:
  using Error::Error;
};

/// Bisection exceeded its iteration budget.
class MaxIterError : public Error {
 public:
  using Error::Error;
};

/// A scan window contained no determinant root.
class NoRootInWindowError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A solve failed; carries the failing parameter point in the message.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace nanoloop
