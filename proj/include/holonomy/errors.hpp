#pragma once

#include <stdexcept>
#include <string>

namespace holonomy {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A violated structural condition. `clause` names the rule that failed,
/// e.g. "g7: n - m >= 1".
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string clause, const std::string& what)
      : std::invalid_argument(clause + ": " + what), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace holonomy
