#pragma once

#include <stdexcept>
#include <string>

namespace eurh {

/// Argument outside the physical domain of an operation (p > 1, omega <= 0,
/// unphysical Bell correlations, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shapes that do not fit together: dimension mismatches, non-square or
/// non-Hermitian input to a routine that requires it.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A non-trace-preserving operation whose success probability vanished.
class DegeneratePostSelection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed state or quantity broke one of its numerical invariants
/// (unit trace, Hermiticity, positivity, agreement of two routes).
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent sweep configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eurh
