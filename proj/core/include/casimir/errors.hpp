#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Invalid model parameters or malformed input documents.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that falls outside the physical domain of a model,
/// e.g. a temperature above the relaxation-time table.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised by the finite-frequency dispersion relations at xi == 0, where the
/// analytic zero-frequency forms must be used instead.
class QuasiStaticLimitRequired : public DomainError {
public:
  using DomainError::DomainError;
};

/// Singular interface-matching system.
class DegeneracyError : public DomainError {
public:
  DegeneracyError(const std::string& what, double k, double xi)
      : DomainError(what), k_(k), xi_(xi) {}
  double k() const noexcept { return k_; }
  double xi() const noexcept { return xi_; }

private:
  double k_;
  double xi_;
};

/// A series, quadrature, or finite-difference estimate failed to reach the
/// requested tolerance. Carries the best bound achieved.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double achieved_bound)
      : std::runtime_error(what), achieved_bound_(achieved_bound) {}
  double achieved_bound() const noexcept { return achieved_bound_; }

private:
  double achieved_bound_;
};

/// Step-halving in a numerical derivative did not settle.
class DifferentiationError : public ConvergenceError {
public:
  using ConvergenceError::ConvergenceError;
};

} // namespace casimir
