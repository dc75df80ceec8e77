#pragma once

#include <optional>
#include <set>

#include "uht/embedder.hpp"
#include "uht/reduce.hpp"
#include "uht/solver.hpp"

namespace uht {

struct Outcome {
  /// For multigraphs the moves refer to the reduced drawing.
  Verdict verdict;
  std::optional<ReductionLog> log;
  std::optional<EmbedResult> embedding;
};

/// Decides whether some planar embedding keeps d's rotations at w. With
/// `embed` set and a feasible verdict, the witness moves are applied and the
/// result is embedded; multigraphs pass through the reduction.
Outcome solve_drawing(const ParityDrawing& d, const std::set<VertexId>& w, bool embed,
                      EmbedTrace* trace = nullptr);

}  // namespace uht
