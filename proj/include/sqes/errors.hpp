#pragma once

#include <stdexcept>
#include <string>

namespace sqes {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (r <= 0, e = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent or incomplete run configuration (missing B, bad mode string, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A result cannot be held by the chosen carrier (Laurent floor exceeded,
/// negative exponent in a polynomial image, ...).
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Gauge conjugation left a centrifugal residue or broke operator parity.
class GaugeInconsistency : public Error {
 public:
  GaugeInconsistency(const std::string& what, std::string residue)
      : Error(what), residue_(std::move(residue)) {}
  const std::string& residue() const noexcept { return residue_; }

 private:
  std::string residue_;
};

/// Coefficient parity incompatible with the r -> rho = r^2/L^2 substitution.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Operator band wider than three terms on the monomial basis.
class NotQesError : public Error {
 public:
  using Error::Error;
};

/// A recurrence row with vanishing leading coefficient blocks a construction.
class DegenerateRecurrence : public Error {
 public:
  DegenerateRecurrence(const std::string& what, int row) : Error(what), row_(row) {}
  int row() const noexcept { return row_; }

 private:
  int row_;
};

/// A polynomial expected to have only real simple roots does not.
class RootPropertyViolation : public Error {
 public:
  RootPropertyViolation(const std::string& what, std::string polynomial)
      : Error(what), polynomial_(std::move(polynomial)) {}
  const std::string& polynomial() const noexcept { return polynomial_; }

 private:
  std::string polynomial_;
};

}  // namespace sqes
