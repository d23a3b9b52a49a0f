#pragma once

#include <stdexcept>
#include <string>

namespace freeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap (diagram enumeration, exact or symbolic k) was exceeded.
class SizeLimitError : public Error {
  public:
    SizeLimitError(const std::string& what, int cap) : Error(what), cap_(cap) {}
    int cap() const noexcept { return cap_; }

  private:
    int cap_;
};

/// Shapes of operands do not agree.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Malformed input: out-of-range index, bad grid size, non-unit phase, ...
class InputError : public Error {
  public:
    using Error::Error;
};

/// Parameter outside the mathematical domain of an operation (n < 2, q = -1, |x| >= 1).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Operands of different scalar kinds were combined.
class MixedScalarError : public Error {
  public:
    using Error::Error;
};

/// Floating-point Gram system too ill-conditioned to solve reliably.
class ConditionError : public Error {
  public:
    ConditionError(const std::string& what, long double rcond) : Error(what), rcond_(rcond) {}
    long double rcond() const noexcept { return rcond_; }

  private:
    long double rcond_;
};

/// A truncated series failed to meet its tolerance within the allowed number of terms.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

}  // namespace freeo
