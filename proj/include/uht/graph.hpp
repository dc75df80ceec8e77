#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "uht/error.hpp"
#include "uht/ids.hpp"

namespace uht {

struct Edge {
  VertexId a{};
  VertexId b{};

  bool is_loop() const { return a == b; }
  bool touches(VertexId v) const { return a == v || b == v; }
  VertexId other(VertexId v) const { return v == a ? b : a; }
  VertexId at(std::uint8_t side) const { return side == 0 ? a : b; }
};

/// Undirected multigraph with stable vertex and edge identifiers. Loops and
/// parallel edges are permitted; `is_simple` reports when neither occurs.
class Multigraph {
 public:
  void add_vertex(VertexId v);
  void add_edge(EdgeId e, VertexId a, VertexId b);
  void remove_edge(EdgeId e);
  void remove_vertex(VertexId v);  // also removes incident edges

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool has_edge(EdgeId e) const { return edges_.contains(e); }
  const Edge& edge(EdgeId e) const;

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Incident edges sorted by id; a loop is listed once.
  const std::vector<EdgeId>& incident(VertexId v) const;
  /// Edge ends sitting at v, sorted; a loop contributes two.
  std::vector<EdgeEnd> ends_at(VertexId v) const;
  /// Loops count twice.
  std::size_t degree(VertexId v) const;

  bool is_simple() const;
  bool adjacent(EdgeId e, EdgeId f) const;
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

  VertexId fresh_vertex_id() const;
  EdgeId fresh_edge_id() const;

  /// Subgraph on `keep` with every edge whose endpoints both lie in `keep`.
  Multigraph induced(const std::set<VertexId>& keep) const;
  Multigraph without_vertices(const std::set<VertexId>& drop) const;

  bool is_subgraph_of(const Multigraph& other) const;

  friend bool operator==(const Multigraph& x, const Multigraph& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
  }

 private:
  std::set<VertexId> vertices_;
  std::map<EdgeId, Edge> edges_;
  std::map<VertexId, std::vector<EdgeId>> incidence_;
};

inline bool operator==(const Edge& x, const Edge& y) { return x.a == y.a && x.b == y.b; }

/// A walk u = w0, e1, w1, ..., ek, wk = v.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

struct SplitAtVertex {
  VertexId cut{};
  std::vector<Multigraph> parts;
};

struct SplitAtPair {
  VertexId u{};
  VertexId v{};
  /// G'_i: one per component of G - {u, v}, in order of least vertex id.
  std::vector<Multigraph> parts;
  /// G_i = G'_i plus the virtual edge `virtual_edges[i]` joining u and v.
  std::vector<Multigraph> augmented;
  std::vector<EdgeId> virtual_edges;
  bool uv_in_graph = false;
  /// The single-edge part G'_0 when uv is an edge of G.
  std::optional<Multigraph> degenerate;
};

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

std::set<VertexId> cut_vertices(const Multigraph& g);
std::vector<std::pair<VertexId, VertexId>> separation_pairs(const Multigraph& g);

SplitAtVertex split_at_cut_vertex(const Multigraph& g, VertexId v);
/// Virtual edges get consecutive ids starting at `first_virtual`.
SplitAtPair split_at_pair(const Multigraph& g, VertexId u, VertexId v, EdgeId first_virtual);

/// BFS shortest path; neighbours are scanned by ascending edge id.
Path path_between(const Multigraph& g, VertexId u, VertexId v);

/// Two vertex-disjoint paths, each joining one of {a, b} to one of {c, d}.
std::optional<std::pair<Path, Path>> two_disjoint_paths(const Multigraph& g,
                                                        std::pair<VertexId, VertexId> from,
                                                        std::pair<VertexId, VertexId> to);

}  // namespace uht
