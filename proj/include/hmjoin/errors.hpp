#pragma once

#include <stdexcept>
#include <string>

namespace hmjoin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// A division that the algebra requires to be exact left a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class NonSymmetricInput : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

// An identity that must hold exactly was observed to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Malformed input document; `pointer` is a JSON pointer to the offending field.
class SpecError : public Error {
 public:
  SpecError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)), message_(message) {}

  const std::string& pointer() const { return pointer_; }
  const std::string& message() const { return message_; }

 private:
  std::string pointer_;
  std::string message_;
};

}  // namespace hmjoin
