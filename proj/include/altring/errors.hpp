#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace altring {

enum class ErrorKind {
  RingMismatch,
  DivisionByZero,
  InvalidField,
  InvalidRing,
  ParseError,
  BudgetExceeded,
  UnsupportedDomain,
  NotIdempotent,
  TrivialIdempotent,
  NotPeirceDecomposable,
  NotBijective,
  NotIdempotentImage,
  HypothesisFailed,
  BranchUndetermined,
  AmbiguousCentralSplit,
  CertificationFailed,
  NotInvertible,
  DimensionMismatch,
  OffsetNotCentral,
  NotAssociative,
  NotMatrixRing,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnsupportedDomain: return "UnsupportedDomain";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::TrivialIdempotent: return "TrivialIdempotent";
    case ErrorKind::NotPeirceDecomposable: return "NotPeirceDecomposable";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotIdempotentImage: return "NotIdempotentImage";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::BranchUndetermined: return "BranchUndetermined";
    case ErrorKind::AmbiguousCentralSplit: return "AmbiguousCentralSplit";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OffsetNotCentral: return "OffsetNotCentral";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotMatrixRing: return "NotMatrixRing";
  }
  return "Unknown";
}

// Every failure raised by the library. `detail` carries the structured
// payload (condition id, witness coordinates) when there is one.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& message,
               nlohmann::ordered_json detail = nullptr)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::ordered_json& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  nlohmann::ordered_json detail_;
};

}  // namespace altring
