#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace friedlab {

/// Position of an eigenpair inside a GradedSpectrum: degree q and index in that degree's list.
struct SpectrumLocation {
  int degree = 0;
  std::size_t index = 0;

  friend bool operator==(const SpectrumLocation&, const SpectrumLocation&) = default;
};

std::string to_string(const SpectrumLocation& loc);

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data. `field()` names the offending field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Argument outside the region where an operation is defined (e.g. Re(sigma) <= c).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Errors that can be attributed to a single eigenpair of a spectrum.
class SpectralError : public Error {
 public:
  SpectralError(const std::string& what, std::optional<SpectrumLocation> where);
  const std::optional<SpectrumLocation>& location() const noexcept { return where_; }

 private:
  std::optional<SpectrumLocation> where_;
};

/// A factor that must be inverted vanishes.
class PoleError : public SpectralError {
 public:
  using SpectralError::SpectralError;
};

/// A complex power would need its base on the cut (-inf, 0].
class BranchError : public SpectralError {
 public:
  using SpectralError::SpectralError;
};

/// The spectrum has mu_T eigenvalues at 1, so the value at sigma = 0 is undefined.
class AcyclicityError : public Error {
 public:
  using Error::Error;
};

/// A fixed point y of g^{-1} T^n with det(1 - D_y) = 0, or a non-discrete fixed set.
class NondegeneracyError : public Error {
 public:
  NondegeneracyError(const std::string& what, long n);
  long n() const noexcept { return n_; }

 private:
  long n_;
};

/// Numerical quadrature did not reach the requested accuracy.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimated_error);
  double estimated_error() const noexcept { return estimated_error_; }

 private:
  double estimated_error_;
};

/// Scenario file could not be read or parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace friedlab
