#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqhnn {

// Malformed or inconsistent input. Negative mathematical verdicts are never
// reported through exceptions; they come back as report values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Unknown generator name, index out of range, or two objects over
// different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A relator of odd length cannot be cut down to squares.
class ParityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The rewritten relator does not have the shape required by the
// a_l^-1 a_0^-1 ... a_0^-1 a_l a_0 ... a_0 squarification.
class TemplateMismatch : public PreconditionError {
 public:
  TemplateMismatch(const std::string& what, std::size_t position)
      : PreconditionError(what), position_(position) {}

  // 1-based position of the first violating letter.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An invariant that the mathematics guarantees was observed to fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqhnn
