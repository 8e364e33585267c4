#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unitacq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Inconsistent ids, views, or certificates handed to an operation.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation's precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A construction reached a state its correctness argument rules out.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace unitacq
