#ifndef HNSF_ERRORS_HPP_
#define HNSF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hnsf {

/// Argument outside the domain of a closed-form expression (v <= 0, theta <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Effective heat capacity Cv + a'(theta) q^2 is no longer positive.
class ModelBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or incomplete configuration; the message names the field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver invariant (positivity, finite values) failed after a step.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hnsf

#endif  // HNSF_ERRORS_HPP_
