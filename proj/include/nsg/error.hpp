#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorCode {
  NonUnitGcd,
  BudgetExceeded,
  UndefinedForN,
  NotInImage,
  DivisorMismatch,
  MissingTableEntry,
  DomainError,
  EmptyClass,
  PreconditionFailed,
  InvalidSemigroup,
  ListTooLarge,
  VerificationFailed,
  CacheCorrupt,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsg
