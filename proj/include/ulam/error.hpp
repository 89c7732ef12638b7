#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulam {

// Base of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: invalid spec, out-of-range parameter, violated precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DataError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : DataError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A configured budget (memory, grid points, scan length) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A synthetic construction could not be completed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Peak refinement found its extremum on the edge of the search bracket.
class BracketEscapeError : public Error {
 public:
  BracketEscapeError(std::size_t stage, double lo, double hi, double at)
      : Error("bracket escape at stage " + std::to_string(stage) + ": extremum at " +
              std::to_string(at) + " is an endpoint of [" + std::to_string(lo) + ", " +
              std::to_string(hi) + "]"),
        stage_(stage) {}

  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

}  // namespace ulam
