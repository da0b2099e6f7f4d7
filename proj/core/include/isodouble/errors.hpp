#pragma once

#include <stdexcept>
#include <string>

namespace isodouble {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested on a focal (singular) level |f| >= 1.
class SingularLevelError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A criterion or formula whose hypotheses do not hold for the input
/// (e.g. the index for m not divisible by 4, or p = m/2+1 not prime).
class InapplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computed quantity contradicts an identity that must hold exactly.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The bend of a collar curve does not fit between r_inf and r_bar.
class InfeasibleGeometryError : public DomainError {
 public:
  InfeasibleGeometryError(const std::string& what, double minimal_r_bar);
  double minimal_r_bar() const noexcept { return minimal_r_bar_; }

 private:
  double minimal_r_bar_;
};

/// Malformed serialized input (JSON document of the wrong shape).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isodouble
