#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charsub {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured budget.
/// `required()` is the number of items the request would have produced
/// (saturated at UINT64_MAX), so callers can decide whether to fall back.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : Error(what), required_(required), cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class NotAGeneratorTuple : public Error {
 public:
  using Error::Error;
};

class ExponentOrderViolation : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class SingleBlock : public Error {
 public:
  using Error::Error;
};

class ShodaConditionFails : public Error {
 public:
  using Error::Error;
};

class NotCharacteristic : public Error {
 public:
  using Error::Error;
};

class InadmissibleTuple : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (other than a dimension mismatch) was violated.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace charsub
