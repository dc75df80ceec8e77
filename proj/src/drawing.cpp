#include "uht/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace uht {

const Cycle& RotationSystem::at(VertexId v) const {
  auto it = cycles_.find(v);
  if (it == cycles_.end()) {
    std::ostringstream os;
    os << "no rotation at vertex " << v;
    throw Error(ErrorCode::UnknownVertex, os.str());
  }
  return it->second;
}

Cycle& RotationSystem::at(VertexId v) {
  return const_cast<Cycle&>(static_cast<const RotationSystem&>(*this).at(v));
}

RotationSystem RotationSystem::restricted(const Multigraph& h) const {
  RotationSystem out;
  for (VertexId v : h.vertices()) {
    Cycle kept;
    for (const EdgeEnd& end : at(v))
      if (h.has_edge(end.edge)) kept.push_back(end);
    out.set(v, std::move(kept));
  }
  return out;
}

RotationSystem RotationSystem::reflected() const {
  RotationSystem out = *this;
  for (auto& [v, cycle] : out.cycles_) std::reverse(cycle.begin(), cycle.end());
  return out;
}

Multigraph RotationSystem::implied_graph() const {
  std::map<EdgeId, std::pair<VertexId, VertexId>> endpoints;
  std::map<EdgeId, int> seen;
  Multigraph g;
  for (const auto& [v, cycle] : cycles_) {
    g.add_vertex(v);
    for (const EdgeEnd& end : cycle) {
      auto& slot = endpoints[end.edge];
      (end.side == 0 ? slot.first : slot.second) = v;
      seen[end.edge] |= 1 << end.side;
    }
  }
  for (const auto& [e, mask] : seen) {
    if (mask != 3) {
      std::ostringstream os;
      os << "edge " << e << " lacks one of its ends";
      throw Error(ErrorCode::NotSubgraph, os.str());
    }
    g.add_edge(e, endpoints[e].first, endpoints[e].second);
  }
  return g;
}

Cycle canonical_cycle(const Cycle& cycle) {
  if (cycle.empty()) return cycle;
  Cycle out = cycle;
  std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  return out;
}

bool same_cyclic_order(const Cycle& x, const Cycle& y) {
  return x.size() == y.size() && canonical_cycle(x) == canonical_cycle(y);
}

std::size_t position_of(const Cycle& cycle, EdgeEnd end) {
  return static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), end) - cycle.begin());
}

RotationSystem sorted_rotation(const Multigraph& g) {
  RotationSystem r;
  for (VertexId v : g.vertices()) r.set(v, g.ends_at(v));
  return r;
}

void check_rotation_matches(const RotationSystem& r, const Multigraph& g) {
  if (r.cycles().size() != g.vertex_count())
    throw Error(ErrorCode::NotSubgraph, "rotation vertex set differs from graph");
  for (VertexId v : g.vertices()) {
    Cycle have = r.at(v);
    std::sort(have.begin(), have.end());
    if (have != g.ends_at(v)) {
      std::ostringstream os;
      os << "rotation at " << v << " does not list exactly the incident edge ends";
      throw Error(ErrorCode::NotSubgraph, os.str());
    }
  }
}

void ParityVector::set(EdgeId e, EdgeId f, bool odd) {
  if (e == f) throw Error(ErrorCode::UnknownEdge, "parity of an edge with itself");
  if (odd) odd_.insert(key(e, f));
  else odd_.erase(key(e, f));
}

ParityDrawing embedding_drawing(const Multigraph& g, const RotationSystem& r) {
  check_rotation_matches(r, g);
  return ParityDrawing{g, r, {}};
}

void check_drawing(const ParityDrawing& d) {
  check_rotation_matches(d.rotation, d.graph);
  for (const auto& [e, f] : d.parity.odd_pairs())
    if (!d.graph.has_edge(e) || !d.graph.has_edge(f))
      throw Error(ErrorCode::UnknownEdge, "parity refers to an edge outside the graph");
}

bool parity(const ParityDrawing& d, EdgeId e, EdgeId f) {
  if (!d.graph.has_edge(e) || !d.graph.has_edge(f) || e == f)
    throw Error(ErrorCode::UnknownEdge, "parity query");
  return d.parity.get(e, f);
}

std::vector<std::pair<EdgeId, EdgeId>> odd_independent_pairs(const ParityDrawing& d) {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (const auto& [e, f] : d.parity.odd_pairs())
    if (!d.graph.adjacent(e, f)) out.emplace_back(e, f);
  return out;
}

bool is_independently_even(const ParityDrawing& d) { return odd_independent_pairs(d).empty(); }

bool is_even_vertex(const ParityDrawing& d, VertexId v) {
  const auto& inc = d.graph.incident(v);
  for (std::size_t i = 0; i < inc.size(); ++i)
    for (std::size_t j = i + 1; j < inc.size(); ++j)
      if (d.parity.get(inc[i], inc[j])) return false;
  return true;
}

std::set<VertexId> even_vertices(const ParityDrawing& d) {
  std::set<VertexId> out;
  for (VertexId v : d.graph.vertices())
    if (is_even_vertex(d, v)) out.insert(v);
  return out;
}

bool satisfies_hypotheses(const ParityDrawing& d, const std::set<VertexId>& w) {
  for (const auto& [e, f] : d.parity.odd_pairs()) {
    const Edge& x = d.graph.edge(e);
    const Edge& y = d.graph.edge(f);
    if (!d.graph.adjacent(e, f)) return false;
    for (VertexId s : {x.a, x.b})
      if (y.touches(s) && w.contains(s)) return false;
  }
  return true;
}

ParityDrawing edge_vertex_move(const ParityDrawing& d, EdgeId e, VertexId v) {
  if (d.graph.edge(e).touches(v))
    throw Error(ErrorCode::EndpointMove, "cannot move an edge across its own endpoint");
  ParityDrawing out = d;
  for (EdgeId f : d.graph.incident(v))
    if (!d.graph.edge(f).is_loop()) out.parity.flip(e, f);
  return out;
}

ParityDrawing wind_around_endpoint(const ParityDrawing& d, EdgeId e, VertexId v) {
  if (!d.graph.edge(e).touches(v)) throw Error(ErrorCode::NotIncident, "winding needs an endpoint");
  ParityDrawing out = d;
  for (EdgeId f : d.graph.incident(v))
    if (f != e && !d.graph.edge(f).is_loop()) out.parity.flip(e, f);
  return out;
}

namespace {

// In-place transposition of positions i and i+1 with the parity flip.
void swap_in_place(ParityDrawing& d, VertexId v, std::size_t i) {
  Cycle& cycle = d.rotation.at(v);
  if (cycle.size() < 2) throw Error(ErrorCode::DegreeTooSmall, "adjacent_swap");
  std::size_t j = (i + 1) % cycle.size();
  std::swap(cycle[i], cycle[j]);
  if (cycle[i].edge != cycle[j].edge) d.parity.flip(cycle[i].edge, cycle[j].edge);
}

}  // namespace

ParityDrawing adjacent_swap(const ParityDrawing& d, VertexId v, std::size_t i) {
  const Cycle& cycle = d.rotation.at(v);
  if (cycle.size() < 2) throw Error(ErrorCode::DegreeTooSmall, "adjacent_swap");
  ParityDrawing out = d;
  swap_in_place(out, v, i % cycle.size());
  return out;
}

ParityDrawing pull_across_anchor(const ParityDrawing& d, VertexId v, EdgeId f, EdgeId anchor) {
  if (f == anchor || !d.graph.has_edge(f) || !d.graph.has_edge(anchor) ||
      !d.graph.edge(f).touches(v) || !d.graph.edge(anchor).touches(v))
    throw Error(ErrorCode::NotIncident, "pull_across_anchor");
  ParityDrawing out = d;
  const Cycle& cycle = out.rotation.at(v);
  const std::size_t n = cycle.size();
  std::size_t p = std::find_if(cycle.begin(), cycle.end(),
                               [f](const EdgeEnd& x) { return x.edge == f; }) -
                  cycle.begin();
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t q = (p + 1) % n;
    EdgeId passed = cycle[q].edge;
    swap_in_place(out, v, p);
    p = q;
    if (passed == anchor) break;
  }
  return out;
}

ParityDrawing make_vertex_even(const ParityDrawing& d, VertexId v, EdgeId anchor,
                               EvenStats* stats) {
  if (!d.graph.has_edge(anchor) || !d.graph.edge(anchor).touches(v))
    throw Error(ErrorCode::NotIncident, "anchor is not incident to the vertex");
  EvenStats local;
  ParityDrawing out = d;
  for (EdgeId f : d.graph.incident(v)) {
    if (f == anchor || !out.parity.get(f, anchor)) continue;
    out = pull_across_anchor(out, v, f, anchor);
    ++local.pulls;
  }
  for (;;) {
    const Cycle& cycle = out.rotation.at(v);
    const std::size_t n = cycle.size();
    std::size_t i = 0;
    for (; i < n && n >= 2; ++i) {
      const EdgeEnd& x = cycle[i];
      const EdgeEnd& y = cycle[(i + 1) % n];
      if (x.edge != y.edge && out.parity.get(x.edge, y.edge)) break;
    }
    if (n < 2 || i == n) break;
    swap_in_place(out, v, i);
    ++local.swaps;
  }
  if (stats) *stats = local;
  if (!is_even_vertex(out, v)) {
    std::ostringstream os;
    os << "vertex " << v << " still has an odd pair after local adjustment";
    throw Error(ErrorCode::OddVertexAfterAdjustment, os.str());
  }
  return out;
}

ParityDrawing restrict(const ParityDrawing& d, const Multigraph& h) {
  if (!h.is_subgraph_of(d.graph)) throw Error(ErrorCode::NotSubgraph, "restrict");
  ParityDrawing out;
  out.graph = h;
  out.rotation = d.rotation.restricted(h);
  for (const auto& [e, f] : d.parity.odd_pairs())
    if (h.has_edge(e) && h.has_edge(f)) out.parity.set(e, f, true);
  return out;
}

namespace {

struct FaceTrace {
  FaceSet set;
  std::vector<std::vector<VertexId>> components;
  std::vector<std::size_t> edges_per_component;
};

FaceTrace trace_faces(const RotationSystem& r) {
  std::map<EdgeEnd, std::pair<VertexId, std::size_t>> where;
  for (const auto& [v, cycle] : r.cycles())
    for (std::size_t i = 0; i < cycle.size(); ++i)
      if (!where.emplace(cycle[i], std::make_pair(v, i)).second)
        throw Error(ErrorCode::NotSubgraph, "edge end listed twice in rotation");
  Multigraph g = r.implied_graph();

  FaceTrace out;
  out.components = connected_components(g);
  std::map<VertexId, std::size_t> comp_of;
  for (std::size_t c = 0; c < out.components.size(); ++c)
    for (VertexId v : out.components[c]) comp_of[v] = c;
  out.set.per_component.assign(out.components.size(), 0);
  out.edges_per_component.assign(out.components.size(), 0);
  for (const auto& [e, ed] : g.edges()) ++out.edges_per_component[comp_of[ed.a]];

  std::set<EdgeEnd> visited;
  for (const auto& [start, loc] : where) {
    if (visited.contains(start)) continue;
    std::vector<EdgeEnd> face;
    EdgeEnd dart = start;
    while (visited.insert(dart).second) {
      face.push_back(dart);
      auto [x, i] = where.at(dart.opposite());
      const Cycle& cycle = r.at(x);
      dart = cycle[(i + 1) % cycle.size()];
    }
    ++out.set.per_component[comp_of[loc.first]];
    out.set.faces.push_back(std::move(face));
  }
  for (std::size_t c = 0; c < out.components.size(); ++c)
    if (out.edges_per_component[c] == 0) out.set.per_component[c] = 1;
  return out;
}

}  // namespace

FaceSet faces(const RotationSystem& r) { return trace_faces(r).set; }

int genus(const RotationSystem& r) {
  FaceTrace t = trace_faces(r);
  int total = 0;
  for (std::size_t c = 0; c < t.components.size(); ++c) {
    const long defect = 2 - static_cast<long>(t.components[c].size()) +
                        static_cast<long>(t.edges_per_component[c]) -
                        static_cast<long>(t.set.per_component[c]);
    if (defect % 2 != 0 || defect < 0)
      throw Error(ErrorCode::OddEulerDefect, "Euler characteristic out of range");
    total += static_cast<int>(defect / 2);
  }
  return total;
}

}  // namespace uht
