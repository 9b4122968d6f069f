#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chieuler {

enum class ErrorKind {
  ZeroDenominator,
  ZeroConstantTerm,
  QisOne,
  PoleAtOne,
  PoleAtMinusOne,
  PoleQ,
  EvenModulus,
  NotPadicIntegral,
  NonUnitNormalizer,
  BadCongruence,
  ParityMismatch,
  CharacterOrderUnsupported,
  ModulusPrimeMismatch,
  ConvergenceDomain,
  DomainError,
  DegenerateSample,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; the
// kind is what callers (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::QisOne: return "QisOne";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorKind::PoleQ: return "PoleQ";
    case ErrorKind::EvenModulus: return "EvenModulus";
    case ErrorKind::NotPadicIntegral: return "NotPadicIntegral";
    case ErrorKind::NonUnitNormalizer: return "NonUnitNormalizer";
    case ErrorKind::BadCongruence: return "BadCongruence";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::CharacterOrderUnsupported: return "CharacterOrderUnsupported";
    case ErrorKind::ModulusPrimeMismatch: return "ModulusPrimeMismatch";
    case ErrorKind::ConvergenceDomain: return "ConvergenceDomain";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace chieuler
