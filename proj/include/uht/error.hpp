#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uht {

enum class ErrorCode {
  Parse,
  UnknownVertex,
  UnknownEdge,
  NotConnected,
  NotTwoConnected,
  NotCutVertex,
  NotSeparationPair,
  NoPath,
  EndpointMove,
  DegreeTooSmall,
  NotIncident,
  NotSubgraph,
  OddVertexAfterAdjustment,
  OddEulerDefect,
  GeneralPosition,
  NotSimple,
  HypothesisViolated,
  ClaimAViolated,
  ClaimBViolated,
  NoIncidentFace,
  NoFaceWithEdge,
  PathNotDisjoint,
  WeakHTViolated,
  ReinsertionBroken,
  BudgetExceeded,
  Unsatisfiable,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace uht
