#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paramkit {

// Stable error codes. The names returned by error_code_name() are part of the
// CLI contract (text and --json output).
enum class ErrorCode {
  SyntaxError,
  UnknownVariable,
  CoefficientOverflow,
  ExponentOverflow,
  RingMismatch,
  LengthMismatch,
  BudgetExceeded,
  ZeroDivisorQuery,
  EmptyVariety,
  NotFiniteLength,
  Unstabilized,
  NotSOP,
  TooLong,
  BadLevel,
  NotALift,
  NotContained,
  WrongDimension,
  NotParameter,
  NoSOPFound,
  WrongCharacteristic,
  NotPrimePower,
  ZeroAnnihilator,
  UnknownScenario,
  ParseError,
  UnknownCommand,
  UnknownName,
  InvalidArgument,
  InternalError,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::CoefficientOverflow: return "CoefficientOverflow";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ZeroDivisorQuery: return "ZeroDivisorQuery";
    case ErrorCode::EmptyVariety: return "EmptyVariety";
    case ErrorCode::NotFiniteLength: return "NotFiniteLength";
    case ErrorCode::Unstabilized: return "Unstabilized";
    case ErrorCode::NotSOP: return "NotSOP";
    case ErrorCode::TooLong: return "TooLong";
    case ErrorCode::BadLevel: return "BadLevel";
    case ErrorCode::NotALift: return "NotALift";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotParameter: return "NotParameter";
    case ErrorCode::NoSOPFound: return "NoSOPFound";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::ZeroAnnihilator: return "ZeroAnnihilator";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "InternalError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  // Errors raised while reading text carry a 1-based position.
  Error(ErrorCode code, const std::string& message, std::size_t line,
        std::size_t column)
      : std::runtime_error(message), code_(code), line_(line), column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  bool has_position() const noexcept { return line_ != 0; }

 private:
  ErrorCode code_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace paramkit
