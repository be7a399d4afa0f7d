#pragma once

#include <stdexcept>
#include <string>

namespace flattice {

enum class ErrorCode {
  MixedAmbient,
  SizeLimit,
  NotClosed,
  NotInCarrier,
  Inconsistent,
  NotPositive,
  NotFAlgebra,
  NegativeWeight,
  NotSemiPrime,
  NotSublattice,
  CertificatesMissing,
  ExtensionInconsistent,
  PreconditionFailed,
  NotIntoCodomain,
  ParseError,
  SchemaError,
  DimensionError,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Library errors carry a machine-readable code plus an optional witness
/// payload (a printed vector, index pair, ...) for reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = "")
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::string& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              std::string witness = "") {
  throw Error(code, message, std::move(witness));
}

}  // namespace flattice
