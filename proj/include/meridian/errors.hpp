#pragma once

#include <stdexcept>
#include <string>

namespace meridian {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an elementary function or a patch.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotSpacelike : public Error {
 public:
  using Error::Error;
};

class DegenerateFrame : public Error {
 public:
  using Error::Error;
};

/// A profile (f, g, φ, w¹, w²) violates the inequality its family requires.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Family constants out of range (a = 0, c = 0, empty section, ...).
class ParamError : public Error {
 public:
  using Error::Error;
};

class CurvatureMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input it does not apply to.
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class SingularProjection : public Error {
 public:
  using Error::Error;
};

}  // namespace meridian
