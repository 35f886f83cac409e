#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adefam {

enum class ErrorCode {
  InvalidRank,
  ParseError,
  NotAPositiveRoot,
  DimensionMismatch,
  MissingVertexWeight,
  NotAdjacent,
  InvalidSelfIntersection,
  ParityMismatch,
  NotDivisibleBy4,
  InvalidBPlus,
  InvalidParameter,
  Intractable,
  GradingUnderflow,
  InvalidGrading,
  FlavorMismatch,
  InvalidChamberIndex,
  InconsistentVanishingFlags,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAPositiveRoot: return "NotAPositiveRoot";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MissingVertexWeight: return "MissingVertexWeight";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::InvalidSelfIntersection: return "InvalidSelfIntersection";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NotDivisibleBy4: return "NotDivisibleBy4";
    case ErrorCode::InvalidBPlus: return "InvalidBPlus";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Intractable: return "Intractable";
    case ErrorCode::GradingUnderflow: return "GradingUnderflow";
    case ErrorCode::InvalidGrading: return "InvalidGrading";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::InvalidChamberIndex: return "InvalidChamberIndex";
    case ErrorCode::InconsistentVanishingFlags: return "InconsistentVanishingFlags";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type;
/// `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adefam
