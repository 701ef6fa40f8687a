#pragma once

#include <stdexcept>
#include <string>

namespace seif {

enum class ErrorCode {
  SingularMatrix,
  NonSquare,
  ClusterAmbiguity,
  DegenerateForm,
  WrongSymmetry,
  NotIsometry,
  InconsistentParity,
  InvalidIndex,
  EigenvalueCondition,
  NotSplit,
  InconsistentSpec,
  NotQuasiUnipotent,
  IncompatibleExponents,
  QuadratureNonconvergence,
  TruncationInsufficient,
  ParityMismatch,
  HyperbolicityViolation,
  NotUnimodular,
  EigenvalueOffCircle,
  SingularNu,
  BadSquareRoot,
  ExponentOutOfRange,
  TierMismatch,
  SectorMismatch,
  BadInput,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace seif
