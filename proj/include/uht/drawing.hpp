#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "uht/graph.hpp"

namespace uht {

/// Clockwise rotation at every vertex. Isolated vertices carry empty cycles.
class RotationSystem {
 public:
  RotationSystem() = default;

  void set(VertexId v, Cycle cycle) { cycles_[v] = std::move(cycle); }
  void erase(VertexId v) { cycles_.erase(v); }
  bool has(VertexId v) const { return cycles_.contains(v); }
  const Cycle& at(VertexId v) const;
  Cycle& at(VertexId v);

  const std::map<VertexId, Cycle>& cycles() const { return cycles_; }

  /// Rotation restricted to the vertices and edges of `h`.
  RotationSystem restricted(const Multigraph& h) const;
  /// Every cycle reversed (the mirror image).
  RotationSystem reflected() const;

  /// Graph implied by the cycles: each edge end names its vertex.
  Multigraph implied_graph() const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

 private:
  std::map<VertexId, Cycle> cycles_;
};

/// Cycle rotated so that its least end comes first.
Cycle canonical_cycle(const Cycle& cycle);
bool same_cyclic_order(const Cycle& x, const Cycle& y);
/// Position of `end` in `cycle`, or cycle.size() if absent.
std::size_t position_of(const Cycle& cycle, EdgeEnd end);

/// Rotation read from the ends of each vertex in ascending order.
RotationSystem sorted_rotation(const Multigraph& g);
/// Throws NotSubgraph when `r` does not cover exactly the ends of `g`.
void check_rotation_matches(const RotationSystem& r, const Multigraph& g);

/// Crossing parity per unordered pair of distinct edges; only odd pairs are stored.
class ParityVector {
 public:
  bool get(EdgeId e, EdgeId f) const { return odd_.contains(key(e, f)); }
  void set(EdgeId e, EdgeId f, bool odd);
  void flip(EdgeId e, EdgeId f) { set(e, f, !get(e, f)); }
  const std::set<std::pair<EdgeId, EdgeId>>& odd_pairs() const { return odd_; }
  std::size_t odd_count() const { return odd_.size(); }

  friend bool operator==(const ParityVector&, const ParityVector&) = default;

 private:
  static std::pair<EdgeId, EdgeId> key(EdgeId e, EdgeId f) { return std::minmax(e, f); }
  std::set<std::pair<EdgeId, EdgeId>> odd_;
};

struct ParityDrawing {
  Multigraph graph;
  RotationSystem rotation;
  ParityVector parity;

  friend bool operator==(const ParityDrawing&, const ParityDrawing&) = default;
};

/// Zero-parity drawing with the given rotation (an embedding when genus 0).
ParityDrawing embedding_drawing(const Multigraph& g, const RotationSystem& r);
void check_drawing(const ParityDrawing& d);

struct FaceSet {
  /// Each face lists its darts; a dart is named by the end it leaves from.
  std::vector<std::vector<EdgeEnd>> faces;
  /// Face count per connected component, components ordered by least vertex.
  std::vector<std::size_t> per_component;
};

bool parity(const ParityDrawing& d, EdgeId e, EdgeId f);
bool is_independently_even(const ParityDrawing& d);
std::vector<std::pair<EdgeId, EdgeId>> odd_independent_pairs(const ParityDrawing& d);
bool is_even_vertex(const ParityDrawing& d, VertexId v);
std::set<VertexId> even_vertices(const ParityDrawing& d);
/// Independent pairs and pairs sharing an endpoint in `w` are all even.
bool satisfies_hypotheses(const ParityDrawing& d, const std::set<VertexId>& w);

ParityDrawing edge_vertex_move(const ParityDrawing& d, EdgeId e, VertexId v);
/// Winds e once around its endpoint v: parity(e, f) flips for every other
/// non-loop f at v. Rotations are unchanged.
ParityDrawing wind_around_endpoint(const ParityDrawing& d, EdgeId e, VertexId v);
/// Transposes the ends at positions i and i+1 (cyclically) of v's rotation and
/// flips their mutual parity.
ParityDrawing adjacent_swap(const ParityDrawing& d, VertexId v, std::size_t i);
/// Walks f's end at v clockwise by adjacent swaps until it sits immediately
/// clockwise of `anchor`'s end. The walk passes the anchor exactly once, so
/// parity(f, anchor) flips; parities of f with every other end passed flip too.
ParityDrawing pull_across_anchor(const ParityDrawing& d, VertexId v, EdgeId f, EdgeId anchor);

struct EvenStats {
  std::size_t pulls = 0;
  std::size_t swaps = 0;
};

ParityDrawing make_vertex_even(const ParityDrawing& d, VertexId v, EdgeId anchor,
                               EvenStats* stats = nullptr);

ParityDrawing restrict(const ParityDrawing& d, const Multigraph& h);

FaceSet faces(const RotationSystem& r);
int genus(const RotationSystem& r);
inline bool is_planar_rotation(const RotationSystem& r) { return genus(r) == 0; }

}  // namespace uht
