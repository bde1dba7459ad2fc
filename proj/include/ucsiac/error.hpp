#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ucs {

enum class ErrorCode {
  NotPrime,
  EvenCharacteristic,
  ReducibleModulus,
  InvalidModulus,
  FieldTooLarge,
  FieldMismatch,
  DivisionByZero,
  OrderDoesNotDivide,
  DimensionMismatch,
  NotSquare,
  NotInvertible,
  TooLargeForExhaustive,
  GeneratorCountMismatch,
  IndexOutOfRange,
  PairNotStrictlyOrdered,
  DuplicatePair,
  HasCenter,
  NotSemisimple,
  NotDim3,
  ProductNotFull,
  NoSmallGeneratingSet,
  SearchSpaceTooLarge,
  NotPrimeField,
  EvenPrime,
  NotCentral,
  InconsistentPresentation,
  RootUndefined,
  ReducibleModule,
  CharacteristicDividesT,
  UnsupportedT,
  UnsupportedQ,
  BadHypothesis,
  DegreeTooLargeForChar,
  CharTooSmall,
  BadCongruence,
  UnexpectedHomDimension,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::GeneratorCountMismatch: return "GeneratorCountMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PairNotStrictlyOrdered: return "PairNotStrictlyOrdered";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::HasCenter: return "HasCenter";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotDim3: return "NotDim3";
    case ErrorCode::ProductNotFull: return "ProductNotFull";
    case ErrorCode::NoSmallGeneratingSet: return "NoSmallGeneratingSet";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotPrimeField: return "NotPrimeField";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorCode::RootUndefined: return "RootUndefined";
    case ErrorCode::ReducibleModule: return "ReducibleModule";
    case ErrorCode::CharacteristicDividesT: return "CharacteristicDividesT";
    case ErrorCode::UnsupportedT: return "UnsupportedT";
    case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    case ErrorCode::BadHypothesis: return "BadHypothesis";
    case ErrorCode::DegreeTooLargeForChar: return "DegreeTooLargeForChar";
    case ErrorCode::CharTooSmall: return "CharTooSmall";
    case ErrorCode::BadCongruence: return "BadCongruence";
    case ErrorCode::UnexpectedHomDimension: return "UnexpectedHomDimension";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Errors that indicate the caller supplied unusable parameters, as opposed
/// to a computation that could not be completed.
constexpr bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime:
    case ErrorCode::EvenCharacteristic:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::InvalidModulus:
    case ErrorCode::FieldTooLarge:
    case ErrorCode::OrderDoesNotDivide:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::PairNotStrictlyOrdered:
    case ErrorCode::DuplicatePair:
    case ErrorCode::NotPrimeField:
    case ErrorCode::EvenPrime:
    case ErrorCode::CharacteristicDividesT:
    case ErrorCode::UnsupportedT:
    case ErrorCode::UnsupportedQ:
    case ErrorCode::BadHypothesis:
    case ErrorCode::DegreeTooLargeForChar:
    case ErrorCode::CharTooSmall:
    case ErrorCode::BadCongruence:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ucs
