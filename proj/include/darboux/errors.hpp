#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace darboux {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity that has to be inverted is (numerically) zero.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Two consecutive curve vertices coincide, so dx on that edge is not invertible.
class DegenerateEdgeError : public DegenerateError {
 public:
  DegenerateEdgeError(std::size_t edge, const std::string& what)
      : DegenerateError(what), edge_(edge) {}
  std::size_t edge() const noexcept { return edge_; }

 private:
  std::size_t edge_;
};

// The spectral parameter equals the polarisation weight m of some edge.
class NonDegeneracyError : public Error {
 public:
  NonDegeneracyError(std::size_t edge, const std::string& what) : Error(what), edge_(edge) {}
  std::size_t edge() const noexcept { return edge_; }

 private:
  std::size_t edge_;
};

// A Riccati denominator vanished: the transform passes through infinity.
class TransformAtInfinityError : public DegenerateError {
 public:
  TransformAtInfinityError(std::size_t vertex, const std::string& what)
      : DegenerateError(what), vertex_(vertex) {}
  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

// Curve data that parses but violates a PolarisedCurve invariant (weights).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Malformed curve document.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Bad numeric parameter passed to an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An iterative method did not converge.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace darboux
