#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginv {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class ArgumentError : public Error {
public:
  using Error::Error;
};

class ZeroMatrix : public Error {
public:
  ZeroMatrix() : Error("operation undefined for the zero matrix") {}
};

class SingularMatrix : public Error {
public:
  SingularMatrix() : Error("matrix is singular") {}
};

class NotGroupInvertible : public Error {
public:
  explicit NotGroupInvertible(std::size_t index)
      : Error("not group invertible: index " + std::to_string(index) + " > 1"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

// A stated precondition of a formula does not hold for the given operands.
class HypothesisViolated : public Error {
public:
  explicit HypothesisViolated(std::string condition)
      : Error("hypothesis violated: " + condition), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

private:
  std::string condition_;
};

// Two computation routes that must agree did not. Indicates a bug.
class EngineInconsistency : public Error {
public:
  using Error::Error;
};

class SpecError : public Error {
public:
  using Error::Error;
};

} // namespace ginv
