#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rf {

enum class ErrorKind {
  InvalidArgument,
  Evaluation,
  Domain,
  Divergence,
  HypothesisViolation,
  Parse,
};

/// Base of every error the library throws. `kind()` lets callers (the CLI in
/// particular) map failures onto exit codes without a cascade of catches.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::InvalidArgument, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

/// A function produced a non-finite value (or hit a domain violation while
/// being sampled). `where()` is the abscissa that was being evaluated.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double where)
      : Error(ErrorKind::Evaluation, what + " at t=" + std::to_string(where)),
        where_(where) {}

  double where() const noexcept { return where_; }

 private:
  double where_;
};

class DivergenceError : public Error {
 public:
  explicit DivergenceError(const std::string& what)
      : Error(ErrorKind::Divergence, what) {}
};

class HypothesisViolation : public Error {
 public:
  HypothesisViolation(const std::string& what, double point)
      : Error(ErrorKind::HypothesisViolation, what), point_(point) {}

  double point() const noexcept { return point_; }

 private:
  double point_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error(ErrorKind::Parse,
              "parse error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace rf
