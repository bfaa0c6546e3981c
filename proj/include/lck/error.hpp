#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lck {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  DenominatorVanishes,
  ZeroVector,
  NotADerivation,
  AmbientMismatch,
  DegreeZero,
  NonClosedLambda,
  NoSolution,
  GaugeUnresolvable,
  NotAlmostComplex,
  NotTransverse,
  NotASubalgebra,
  Degenerate,
  NoLeeForm,
  LeeFormNotClosed,
  NotCompatible,
  DegenerateAtPoint,
  DegenerateMetric,
  NotAdInvariant,
  DegenerateB,
  IsotropicLeeVector,
  ZeroForm,
  ConicalOrbit,
  DegenerateOnQuotient,
  UnknownId,
  ParseError,
  UnknownCommand,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::NonClosedLambda: return "NonClosedLambda";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::GaugeUnresolvable: return "GaugeUnresolvable";
    case ErrorKind::NotAlmostComplex: return "NotAlmostComplex";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NoLeeForm: return "NoLeeForm";
    case ErrorKind::LeeFormNotClosed: return "LeeFormNotClosed";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::DegenerateAtPoint: return "DegenerateAtPoint";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::NotAdInvariant: return "NotAdInvariant";
    case ErrorKind::DegenerateB: return "DegenerateB";
    case ErrorKind::IsotropicLeeVector: return "IsotropicLeeVector";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::ConicalOrbit: return "ConicalOrbit";
    case ErrorKind::DegenerateOnQuotient: return "DegenerateOnQuotient";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness` names the concrete object
/// (basis tuple, parameter point, rank) that certifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string witness)
      : std::runtime_error(std::string(to_string(kind)) +
                           (witness.empty() ? "" : "(" + witness + ")")),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace lck
