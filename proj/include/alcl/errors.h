#ifndef ALCL_ERRORS_H_
#define ALCL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace alcl {

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A field left the domain where a functional or the flow is defined, e.g. a
// defocusing field with |alpha_n| >= 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The numerics are under-resolved: time step, snapshot density, etc.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alcl

#endif  // ALCL_ERRORS_H_
