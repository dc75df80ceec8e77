#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uht/drawing.hpp"
#include "uht/embedder.hpp"

namespace uht {

/// One edge end pulled off its vertex: `stub` joins `at` to the new degree-2
/// vertex `hub`, and the long part of `edge` now leaves from `hub`.
struct Subdivision {
  EdgeId edge{};
  std::uint8_t side = 0;
  VertexId at{};
  VertexId hub{};
  EdgeId stub{};
};

struct RemovedEdge {
  EdgeId edge{};
  VertexId a{};
  VertexId b{};
  /// Kept copy of a parallel bundle; empty for loops.
  std::optional<EdgeId> anchor;
};

struct ReductionLog {
  std::vector<Subdivision> subdivisions;
  std::vector<RemovedEdge> removed;
  std::set<VertexId> w;
  /// Rotations of the input drawing, for the final equality check.
  RotationSystem original;

  std::string to_json_lines() const;
};

struct Reduction {
  ParityDrawing drawing;
  ReductionLog log;
};

struct ReduceOptions {
  /// Also protect every even vertex, not just W.
  bool subdivide_all_even = false;
  /// Skip for callers that only want the decision problem; subdivision never
  /// depends on the hypotheses.
  bool check_hypotheses = true;
};

Reduction reduce(const ParityDrawing& d, const std::set<VertexId>& w, const ReduceOptions& options = {});

/// Puts back the removed loops and parallel copies and smooths the hubs.
EmbedResult reinsert_and_contract(const EmbedResult& reduced, const ReductionLog& log);

/// reduce, embed_unified, reinsert_and_contract.
EmbedResult embed_multigraph(const EmbedRequest& request, EmbedTrace* trace = nullptr,
                             ReductionLog* log = nullptr);

}  // namespace uht
