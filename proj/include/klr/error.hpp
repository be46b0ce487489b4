#pragma once

#include <stdexcept>
#include <string>

namespace klr {

/// A violated precondition on user-supplied data.  `precondition` names the
/// rule and `value` renders the offending input; both end up in the CLI's
/// machine-readable error object.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string precondition, std::string value)
      : std::runtime_error(precondition + ": " + value),
        precondition_(std::move(precondition)), value_(std::move(value)) {}

  const std::string& precondition() const noexcept { return precondition_; }
  const std::string& value() const noexcept { return value_; }

private:
  std::string precondition_;
  std::string value_;
};

}  // namespace klr
