#include "uht/error.hpp"

namespace uht {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::NotCutVertex: return "NotCutVertex";
    case ErrorCode::NotSeparationPair: return "NotSeparationPair";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::EndpointMove: return "EndpointMove";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::OddVertexAfterAdjustment: return "OddVertexAfterAdjustment";
    case ErrorCode::OddEulerDefect: return "OddEulerDefect";
    case ErrorCode::GeneralPosition: return "GeneralPosition";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ClaimAViolated: return "ClaimAViolated";
    case ErrorCode::ClaimBViolated: return "ClaimBViolated";
    case ErrorCode::NoIncidentFace: return "NoIncidentFace";
    case ErrorCode::NoFaceWithEdge: return "NoFaceWithEdge";
    case ErrorCode::PathNotDisjoint: return "PathNotDisjoint";
    case ErrorCode::WeakHTViolated: return "WeakHTViolated";
    case ErrorCode::ReinsertionBroken: return "ReinsertionBroken";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace uht
