#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uht/drawing.hpp"

namespace uht {

/// A drawing plus the vertices whose rotations must survive. The drawing must
/// be independently even and every pair of edges meeting at a vertex of `w`
/// must be even.
struct EmbedRequest {
  ParityDrawing drawing;
  std::set<VertexId> w;
};

/// A genus-0 rotation system. `preserved` lists the vertices whose cycles equal
/// those of the input drawing (every even vertex, hence all of W).
struct EmbedResult {
  RotationSystem rotation;
  std::set<VertexId> preserved;
};

struct TraceStep {
  int depth = 0;
  std::string kind;  // "trivial", "case0", "case1", "case2", "case3"
  std::vector<VertexId> junction;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::string detail;
};

struct EmbedTrace {
  std::vector<TraceStep> steps;
  std::string to_json_lines() const;
};

/// Restarts every preserved cycle at the reference's first end, so preserved
/// rotations compare equal element by element.
void align_preserved(EmbedResult& result, const RotationSystem& reference);

EmbedResult embed_unified(const EmbedRequest& request, EmbedTrace* trace = nullptr);

EmbedResult case0_disjoint_union(const std::vector<EmbedResult>& results);

struct ClaimA {
  std::size_t part = 0;
  /// The part's ends at the cut vertex, read clockwise.
  Cycle order;
};

/// Least-index part whose ends at v form one cyclic interval of v's rotation.
ClaimA claim_a_consecutive_part(const ParityDrawing& d, VertexId v, const SplitAtVertex& split);

/// Splices the inner embedding into a corner of the outer one at v. With a
/// `target` rotation the corner is the one that reproduces `target` at v and
/// the inner cycle must already agree with it; otherwise the corner after the
/// outer's least end is used.
EmbedResult glue_at_vertex(const EmbedResult& outer, const EmbedResult& inner, VertexId v,
                           const Cycle* target);

/// A new u-v edge drawn next to `path`.
struct Routing {
  EdgeId edge{};
  /// Crossing parity of the new edge with each host edge.
  std::map<EdgeId, bool> parity;
  /// The new end goes immediately clockwise of this end at u ...
  EdgeEnd after_at_u;
  /// ... and immediately counterclockwise of this end at v.
  EdgeEnd before_at_v;
};

Routing route_edge_along_path(const ParityDrawing& d, const Multigraph& host, VertexId u,
                              VertexId v, const Path& path, EdgeId new_edge);

/// host + routed edge, with rotations and parities taken from d and the routing.
ParityDrawing routed_drawing(const ParityDrawing& d, const Multigraph& host, VertexId u,
                             VertexId v, const Routing& routing);

/// Parts of a split in the indexing used by the Case 2 checks: the single-edge
/// part first when uv is an edge, then the components.
std::vector<Multigraph> indexed_parts(const SplitAtPair& split);

struct ClaimB {
  /// Clockwise cyclic order of part indices around each even endpoint.
  std::optional<std::vector<std::size_t>> order_u;
  std::optional<std::vector<std::size_t>> order_v;
  /// Per even endpoint, the clockwise linear order of each part's ends.
  std::map<std::size_t, Cycle> blocks_u;
  std::map<std::size_t, Cycle> blocks_v;
};

ClaimB claim_b_check(const ParityDrawing& d, VertexId u, VertexId v, const SplitAtPair& split);

/// Identifies the inner virtual edge with `glue` in the outer embedding, placing
/// the inner part just counterclockwise of `glue` at u and just clockwise of it
/// at v. With keep_glue false the glue edge is deleted afterwards.
EmbedResult glue_at_edge(const EmbedResult& outer, const EmbedResult& inner, VertexId u, VertexId v,
                         EdgeId glue, EdgeId inner_virtual, bool keep_glue);

struct Case3Stats {
  std::size_t adjusted_vertices = 0;
  std::size_t pulls = 0;
  std::size_t swaps = 0;
  /// False if some vertex needed more than C(deg, 2) swaps.
  bool swap_bound_held = true;
};

EmbedResult case3_three_connected(const ParityDrawing& d, const std::set<VertexId>& w,
                                  Case3Stats* stats = nullptr);

}  // namespace uht
