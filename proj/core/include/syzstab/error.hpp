#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace syzstab {

/// Raised when an operation is called outside its domain. `criterion()`
/// names the check that refused the input (e.g. "primary", "equal-degree").
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string criterion, const std::string& what)
      : std::invalid_argument(what), criterion_(std::move(criterion)) {}

  const std::string& criterion() const noexcept { return criterion_; }

 private:
  std::string criterion_;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace syzstab
