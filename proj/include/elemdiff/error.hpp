#pragma once

#include <stdexcept>
#include <string>

namespace elemdiff {

// Every contract violation raised by the library derives from Error so the
// CLI can turn it into a machine-readable object.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& message) : Error("size_limit", message) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& message) : Error("argument", message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
};

class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& message) : Error("contract_violation", message) {}
};

}  // namespace elemdiff
