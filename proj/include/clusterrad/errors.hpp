#pragma once

#include <stdexcept>
#include <string>

namespace clusterrad {

/// Raised when an operation's mathematical precondition does not hold
/// (negative radius, non-tempered tail, wrong potential class, ...).
/// `category()` is a short machine-readable tag that the CLI forwards in its
/// error JSON.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

}  // namespace clusterrad
