#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation
/// (non-positive order, t outside the grid, negative base with a fractional exponent).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Length or grid mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A sampled function produced a non-finite value at a grid node.
class SamplingError : public Error {
 public:
  SamplingError(std::size_t node, double t, const std::string& what)
      : Error(what), node_(node), t_(t) {}
  std::size_t node() const noexcept { return node_; }
  double t() const noexcept { return t_; }

 private:
  std::size_t node_;
  double t_;
};

/// Malformed expression text. `offset` is a byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Expression evaluated to a non-finite value.
class EvalError : public Error {
 public:
  EvalError(std::size_t offset, const std::string& what)
      : Error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The per-node scalar iteration of the solver did not converge.
class ConvergenceError : public Error {
 public:
  ConvergenceError(std::size_t node, const std::string& what)
      : Error(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

/// Adaptive quadrature could not reach the requested tolerance.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem description (bad orders, wrong number of initial values, ...).
class ProblemError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfm
