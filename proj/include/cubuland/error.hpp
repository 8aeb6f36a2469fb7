#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubuland {

enum class ErrorKind {
  InvalidInput,
  DegenerateBasepoint,
  BudgetExceeded,
  StructuralFailure,
  InvalidLattice,
  BelowMinimum,
  UnsupportedConfiguration,
  InvalidRetwist,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers (the CLI
/// in particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::InvalidInput, message);
}

}  // namespace cubuland
