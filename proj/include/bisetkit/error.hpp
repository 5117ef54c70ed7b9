#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bisetkit {

enum class ErrorCode {
  InvalidTable,
  NotNormal,
  NotSubgroup,
  OrderBound,
  OutOfCatalog,
  UnknownGroup,
  MiddleMismatch,
  InterfaceMismatch,
  FactorMismatch,
  NotAbelian,
  NonRationalValues,
  NotDivisor,
  CatalogInsufficient,
  NotCentral,
  NotAutomorphism,
  PreconditionViolated,
  SearchBound,
  FoundBridge,
  InvalidInput,
  Internal,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::OrderBound: return "OrderBound";
    case ErrorCode::OutOfCatalog: return "OutOfCatalog";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::MiddleMismatch: return "MiddleMismatch";
    case ErrorCode::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorCode::FactorMismatch: return "FactorMismatch";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NonRationalValues: return "NonRationalValues";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::CatalogInsufficient: return "CatalogInsufficient";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SearchBound: return "SearchBound";
    case ErrorCode::FoundBridge: return "FoundBridge";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace bisetkit
