#pragma once

#include <stdexcept>
#include <string>

namespace gtbasis {

/// Argument lies outside the region where an operation is defined
/// (blade mask wider than the algebra, point outside the convergence box, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The kernel d = 1 - 2 x_m h_m + h_m^2 |x|^2 vanished or went negative.
class SingularDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands disagree on dimension, coefficient ring or scalar mode.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gtbasis
