#pragma once

#include <stdexcept>
#include <string>

namespace orthomono {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  NonSquare,
  DimensionMismatch,
  NoEmbedding,
  NotGaloisStable,
  TooLarge,
  EvenDimension,
  DegenerateForm,
  Characteristic2,
  NotInvariant,
  BoundExceeded,
  TrivialGroup,
  ZeroVector,
  NoSuitableWord,
  NotAbelian,
  NotCoprime,
  NotSemisimple,
  NotIsometry,
  NotSolvable,
  NotIrreducible,
  ParityViolation,
  HypothesisViolated,
  InvariantViolation,
  CertificateCheckFailed,
  NonScalarForm,
  ParseError,
  InvalidArgument,
};

/// Coarse failure classes. The command-line exit code is a function of the class only.
enum class FailureClass { Parse, Hypothesis, Invariant, Resource, Usage };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::ZeroInput: return "zero-input";
    case ErrorKind::NonSquare: return "non-square";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NoEmbedding: return "no-embedding";
    case ErrorKind::NotGaloisStable: return "not-galois-stable";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::EvenDimension: return "even-dimension";
    case ErrorKind::DegenerateForm: return "degenerate-form";
    case ErrorKind::Characteristic2: return "characteristic-2";
    case ErrorKind::NotInvariant: return "not-invariant";
    case ErrorKind::BoundExceeded: return "bound-exceeded";
    case ErrorKind::TrivialGroup: return "trivial-group";
    case ErrorKind::ZeroVector: return "zero-vector";
    case ErrorKind::NoSuitableWord: return "no-suitable-word";
    case ErrorKind::NotAbelian: return "not-abelian";
    case ErrorKind::NotCoprime: return "not-coprime";
    case ErrorKind::NotSemisimple: return "not-semisimple";
    case ErrorKind::NotIsometry: return "not-isometry";
    case ErrorKind::NotSolvable: return "not-solvable";
    case ErrorKind::NotIrreducible: return "not-irreducible";
    case ErrorKind::ParityViolation: return "parity-violation";
    case ErrorKind::HypothesisViolated: return "hypothesis-violated";
    case ErrorKind::InvariantViolation: return "invariant-violation";
    case ErrorKind::CertificateCheckFailed: return "certificate-check-failed";
    case ErrorKind::NonScalarForm: return "non-scalar-form";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

inline FailureClass failure_class(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return FailureClass::Parse;
    case ErrorKind::EvenDimension:
    case ErrorKind::DegenerateForm:
    case ErrorKind::Characteristic2:
    case ErrorKind::NotIsometry:
    case ErrorKind::NotSolvable:
    case ErrorKind::NotIrreducible:
    case ErrorKind::HypothesisViolated:
    case ErrorKind::NonScalarForm:
      return FailureClass::Hypothesis;
    case ErrorKind::ParityViolation:
    case ErrorKind::InvariantViolation:
    case ErrorKind::CertificateCheckFailed:
    case ErrorKind::NotSemisimple:
    case ErrorKind::NotCoprime:
      return FailureClass::Invariant;
    case ErrorKind::TooLarge:
    case ErrorKind::BoundExceeded:
    case ErrorKind::NoSuitableWord:
      return FailureClass::Resource;
    default:
      return FailureClass::Usage;
  }
}

/// 0 is success; 1 parse, 2 hypothesis, 3 invariant, 4 resource bound, 5 usage.
inline int exit_code(FailureClass c) {
  switch (c) {
    case FailureClass::Parse: return 1;
    case FailureClass::Hypothesis: return 2;
    case FailureClass::Invariant: return 3;
    case FailureClass::Resource: return 4;
    case FailureClass::Usage: return 5;
  }
  return 5;
}

}  // namespace orthomono
