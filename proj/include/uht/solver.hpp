#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uht/drawing.hpp"
#include "uht/gf2.hpp"

namespace uht {

/// Redraw edge `edge` across vertex `vertex`. When `vertex` is an endpoint
/// (only ever one in W) the edge winds once around it instead.
struct MoveVariable {
  EdgeId edge{};
  VertexId vertex{};
  friend auto operator<=>(const MoveVariable&, const MoveVariable&) = default;
};

struct ConstrainedPair {
  EdgeId e{};
  EdgeId f{};
  /// The common endpoint for pairs constrained through W; empty for independent pairs.
  std::optional<VertexId> shared;
};

/// One row per independent pair and per pair meeting at a W vertex; one column
/// per move variable (edge-major, vertices ascending). Windings around a W
/// endpoint keep the rotation at W, so they are variables too.
struct UnifiedSystem {
  std::vector<MoveVariable> variables;
  std::vector<ConstrainedPair> pairs;
  GF2Matrix matrix;
  std::vector<std::uint8_t> rhs;
};

UnifiedSystem build_system(const ParityDrawing& d, const std::set<VertexId>& w);
GF2Solution gf2_solve(const UnifiedSystem& system);

struct Verdict {
  bool feasible = false;
  std::vector<MoveVariable> moves;
  std::vector<std::size_t> certificate;
  std::size_t variables = 0;
  std::size_t rows = 0;
  /// Set when the parity system and the rotation data disagree, which only
  /// happens for drawings that cannot be realized in the plane.
  bool inconsistent_input = false;
};

/// Applies the moves to the parity vector of d.
ParityDrawing apply_moves(const ParityDrawing& d, const std::vector<MoveVariable>& moves);

Verdict decide_unified(const ParityDrawing& d, const std::set<VertexId>& w);
Verdict decide_strong(const ParityDrawing& d);
/// W = V. The exact answer is genus(d.rotation) == 0; a solvable system with a
/// non-planar rotation is reported infeasible and flagged.
Verdict decide_weak(const ParityDrawing& d);

}  // namespace uht
