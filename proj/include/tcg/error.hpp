#pragma once

#include <stdexcept>
#include <string>

namespace tcg {

enum class ErrorCode {
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  NotSubgroup,
  NotNormal,
  NotPrime,
  DoesNotDivide,
  NotPGroup,
  OrderTooLarge,
  OrderCapExceeded,
  ZeroOrder,
  OrderTooSmall,
  NTooSmall,
  UnsupportedType,
  NotIsomorphism,
  CentersNotIsomorphic,
  AbelianGroup,
  TooManyVertices,
  QuotientTooLarge,
  MalformedWitness,
  WellDefinednessViolation,
  LemmaViolation,
  NotConjugateTypeTwo,
  DecompositionNotFound,
  ParseError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace tcg
