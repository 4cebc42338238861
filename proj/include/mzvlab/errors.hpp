#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLetter : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A word lies outside the subalgebra an operation is defined on.
class NotInSubalgebra : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InconsistentIso : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mzv
