#pragma once

#include <stdexcept>
#include <string>

namespace edept {

/// Root of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or preconditions (bad alpha, negative radius, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Non-finite intermediate while evaluating a closed form.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A differentiation scheme could not produce a derivative.
class SchemeError : public Error {
 public:
  using Error::Error;
};

/// Sampled data does not decay at the edge of a quadrature/transform grid.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A quadrature or spectral functional failed to converge under refinement.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A spectral amplitude has a longitudinal part above tolerance.
class TransversalityError : public Error {
 public:
  TransversalityError(const std::string& what, std::size_t i, std::size_t j, double residual)
      : Error(what), node_i(i), node_j(j), residual(residual) {}
  std::size_t node_i;
  std::size_t node_j;
  double residual;
};

/// Power-law fit could not be carried out.
class FitError : public Error {
 public:
  using Error::Error;
};

/// Malformed run configuration.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : Error(key.empty() ? what : key + ": " + what), key(key) {}
  std::string key;
};

}  // namespace edept
