#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logvf {

enum class ErrorKind {
  SyntaxError,
  UnknownVariable,
  IndexOutOfRange,
  VariableMismatch,
  OrderMismatch,
  PrecisionRequired,
  NotLogarithmic,
  WrongCount,
  NotAtOrigin,
  NotFree,
  HasConstantPart,
  NonRationalEigenvalues,
  ProductInput,
  CertificateFailure,
  PreconditionViolated,
  VanishesAtOrigin,
  TruncationTooSmall,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

// All typed failures raised by the library.  The kind is stable and is what
// the CLI maps to exit codes and embeds into reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace logvf
