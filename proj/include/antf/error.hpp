#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antf {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over different ambient variable sets.
class AmbientMismatch : public Error {
public:
  AmbientMismatch(std::size_t a, std::size_t b)
      : Error("ambient mismatch: " + std::to_string(a) + " vs " + std::to_string(b) + " variables") {}
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Input is outside the hypotheses of the closed-form result being applied.
class HypothesisViolation : public Error {
public:
  HypothesisViolation(const std::string& what, std::string hint)
      : Error(what), hint_(std::move(hint)) {}
  const std::string& hint() const { return hint_; }

private:
  std::string hint_;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

}  // namespace antf
