#pragma once

#include <stdexcept>
#include <string>

namespace sinc {

/// Raised when an argument lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a rigorous computation cannot reach a decision (for example an
/// enclosure that keeps straddling zero after the allowed precision retries).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sinc
