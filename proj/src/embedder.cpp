#include "uht/embedder.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace uht {

std::string EmbedTrace::to_json_lines() const {
  std::string out;
  for (const auto& s : steps) {
    nlohmann::json j;
    j["depth"] = s.depth;
    j["case"] = s.kind;
    std::vector<int> junction;
    for (VertexId v : s.junction) junction.push_back(raw(v));
    j["junction"] = junction;
    j["vertices"] = s.vertices;
    j["edges"] = s.edges;
    if (!s.detail.empty()) j["detail"] = s.detail;
    out += j.dump();
    out += '\n';
  }
  return out;
}

namespace {

EdgeEnd end_at(const Multigraph& g, EdgeId e, VertexId v) {
  const Edge& ed = g.edge(e);
  if (ed.a == v) return {e, 0};
  if (ed.b == v) return {e, 1};
  throw Error(ErrorCode::NotIncident, "edge does not end at vertex");
}

// Cycle rotated so that `first` leads, or nullopt if absent.
std::optional<Cycle> starting_at(const Cycle& cycle, EdgeEnd first) {
  auto it = std::find(cycle.begin(), cycle.end(), first);
  if (it == cycle.end()) return std::nullopt;
  Cycle out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

// Splits a cyclic sequence of labels into maximal runs. Returns the run labels in
// cyclic order and, per label, its run; nullopt if some label occurs in two runs.
struct Runs {
  std::vector<std::size_t> order;
  std::map<std::size_t, Cycle> blocks;
};

std::optional<Runs> cyclic_runs(const Cycle& cycle, const std::vector<std::size_t>& labels) {
  Runs runs;
  const std::size_t n = cycle.size();
  if (n == 0) return runs;
  std::size_t start = 0;
  while (start < n && labels[start] == labels[(start + n - 1) % n]) ++start;
  if (start == n) {
    runs.order.push_back(labels[0]);
    runs.blocks[labels[0]] = cycle;
    return runs;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (start + k) % n;
    const std::size_t label = labels[i];
    if (k == 0 || labels[(i + n - 1) % n] != label) {
      if (runs.blocks.contains(label)) return std::nullopt;
      runs.order.push_back(label);
    }
    runs.blocks[label].push_back(cycle[i]);
  }
  return runs;
}

EmbedResult merged(const EmbedResult& x, const EmbedResult& y) {
  EmbedResult out = x;
  for (const auto& [v, cycle] : y.rotation.cycles())
    if (!out.rotation.has(v)) out.rotation.set(v, cycle);
  out.preserved.insert(y.preserved.begin(), y.preserved.end());
  return out;
}

}  // namespace

EmbedResult case0_disjoint_union(const std::vector<EmbedResult>& results) {
  EmbedResult out;
  for (const auto& r : results) {
    for (const auto& [v, cycle] : r.rotation.cycles()) {
      if (out.rotation.has(v)) throw Error(ErrorCode::Internal, "components share a vertex");
      out.rotation.set(v, cycle);
    }
    out.preserved.insert(r.preserved.begin(), r.preserved.end());
  }
  return out;
}

ClaimA claim_a_consecutive_part(const ParityDrawing& d, VertexId v, const SplitAtVertex& split) {
  const Cycle& rot = d.rotation.at(v);
  std::vector<std::size_t> labels;
  for (const EdgeEnd& end : rot) {
    std::size_t part = split.parts.size();
    for (std::size_t i = 0; i < split.parts.size(); ++i)
      if (split.parts[i].has_edge(end.edge)) part = i;
    if (part == split.parts.size()) throw Error(ErrorCode::NotSubgraph, "edge outside every part");
    labels.push_back(part);
  }
  const std::size_t n = rot.size();
  for (std::size_t part = 0; part < split.parts.size(); ++part) {
    std::vector<std::size_t> mine;
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] == part) mine.push_back(i);
    if (mine.empty()) continue;
    // Consecutive iff exactly one position of the part is preceded by a foreign end.
    std::size_t starts = 0;
    std::size_t first = mine.front();
    for (std::size_t i : mine) {
      if (labels[(i + n - 1) % n] != part) {
        ++starts;
        first = i;
      }
    }
    if (starts > 1) continue;
    ClaimA out{part, {}};
    for (std::size_t k = 0; k < mine.size(); ++k) out.order.push_back(rot[(first + k) % n]);
    return out;
  }
  std::ostringstream os;
  os << "no part is consecutive in the rotation at " << v;
  throw Error(ErrorCode::ClaimAViolated, os.str());
}

EmbedResult glue_at_vertex(const EmbedResult& outer, const EmbedResult& inner, VertexId v,
                           const Cycle* target) {
  if (!outer.rotation.has(v) || !inner.rotation.has(v))
    throw Error(ErrorCode::NoIncidentFace, "junction vertex missing from an embedding");
  const Cycle& outer_cycle = outer.rotation.at(v);
  const Cycle& inner_cycle = inner.rotation.at(v);
  Cycle spliced = outer_cycle;

  if (target) {
    std::set<EdgeEnd> inner_ends(inner_cycle.begin(), inner_cycle.end());
    std::vector<std::size_t> labels;
    for (const EdgeEnd& end : *target) labels.push_back(inner_ends.contains(end) ? 1 : 0);
    auto runs = cyclic_runs(*target, labels);
    if (!runs || !runs->blocks.contains(1))
      throw Error(ErrorCode::ClaimAViolated, "inner ends are not consecutive in the target");
    const Cycle& block = runs->blocks.at(1);
    if (!same_cyclic_order(block, inner_cycle))
      throw Error(ErrorCode::Internal, "inner embedding lost the rotation at the junction");
    if (outer_cycle.empty()) {
      spliced = block;
    } else {
      const std::size_t at = position_of(*target, block.front());
      const EdgeEnd before = (*target)[(at + target->size() - 1) % target->size()];
      const std::size_t pos = position_of(spliced, before);
      if (pos == spliced.size())
        throw Error(ErrorCode::NoIncidentFace, "target corner not present in outer embedding");
      spliced.insert(spliced.begin() + static_cast<long>(pos) + 1, block.begin(), block.end());
    }
  } else if (spliced.empty()) {
    spliced = inner_cycle;
  } else {
    const auto least = std::min_element(spliced.begin(), spliced.end()) - spliced.begin();
    spliced.insert(spliced.begin() + least + 1, inner_cycle.begin(), inner_cycle.end());
  }

  EmbedResult out = merged(outer, inner);
  out.rotation.set(v, std::move(spliced));
  if (!target) out.preserved.erase(v);
  return out;
}

Routing route_edge_along_path(const ParityDrawing& d, const Multigraph& host, VertexId u,
                              VertexId v, const Path& path, EdgeId new_edge) {
  if (path.edges.empty() || path.vertices.front() != u || path.vertices.back() != v)
    throw Error(ErrorCode::PathNotDisjoint, "path does not join u and v");
  for (std::size_t k = 1; k + 1 < path.vertices.size(); ++k)
    if (host.has_vertex(path.vertices[k]))
      throw Error(ErrorCode::PathNotDisjoint, "path interior meets the host");
  for (EdgeId e : path.edges)
    if (host.has_edge(e)) throw Error(ErrorCode::PathNotDisjoint, "path shares an edge with host");

  Routing r;
  r.edge = new_edge;
  // The host avoids the path interior, so the corridor-side term vanishes and
  // the new edge inherits the summed parities of the path edges.
  for (const auto& [f, ed] : host.edges()) {
    bool odd = false;
    for (EdgeId e : path.edges) odd ^= d.parity.get(e, f);
    r.parity[f] = odd;
  }
  r.after_at_u = end_at(d.graph, path.edges.front(), u);
  r.before_at_v = end_at(d.graph, path.edges.back(), v);
  return r;
}

ParityDrawing routed_drawing(const ParityDrawing& d, const Multigraph& host, VertexId u,
                             VertexId v, const Routing& routing) {
  ParityDrawing out = restrict(d, host);
  out.graph.add_edge(routing.edge, u, v);
  auto insert_and_filter = [&](VertexId x, EdgeEnd anchor, EdgeEnd fresh, bool after) {
    Cycle full = d.rotation.at(x);
    const std::size_t pos = position_of(full, anchor);
    if (pos == full.size()) throw Error(ErrorCode::Internal, "routing anchor missing");
    full.insert(full.begin() + static_cast<long>(pos) + (after ? 1 : 0), fresh);
    Cycle kept;
    for (const EdgeEnd& end : full)
      if (host.has_edge(end.edge) || end.edge == routing.edge) kept.push_back(end);
    out.rotation.set(x, std::move(kept));
  };
  insert_and_filter(u, routing.after_at_u, {routing.edge, 0}, true);
  insert_and_filter(v, routing.before_at_v, {routing.edge, 1}, false);
  for (const auto& [f, odd] : routing.parity)
    if (odd) out.parity.set(routing.edge, f, true);
  return out;
}

std::vector<Multigraph> indexed_parts(const SplitAtPair& split) {
  std::vector<Multigraph> parts;
  if (split.degenerate) parts.push_back(*split.degenerate);
  parts.insert(parts.end(), split.parts.begin(), split.parts.end());
  return parts;
}

ClaimB claim_b_check(const ParityDrawing& d, VertexId u, VertexId v, const SplitAtPair& split) {
  const auto parts = indexed_parts(split);
  ClaimB out;
  auto order_at = [&](VertexId x, std::map<std::size_t, Cycle>& blocks)
      -> std::optional<std::vector<std::size_t>> {
    if (!is_even_vertex(d, x)) return std::nullopt;
    const Cycle& rot = d.rotation.at(x);
    std::vector<std::size_t> labels;
    for (const EdgeEnd& end : rot) {
      auto it = std::find_if(parts.begin(), parts.end(),
                             [&](const Multigraph& p) { return p.has_edge(end.edge); });
      if (it == parts.end()) throw Error(ErrorCode::NotSubgraph, "edge outside every part");
      labels.push_back(static_cast<std::size_t>(it - parts.begin()));
    }
    auto runs = cyclic_runs(rot, labels);
    if (!runs) {
      std::ostringstream os;
      os << "a part is not consecutive in the rotation at " << x;
      throw Error(ErrorCode::ClaimBViolated, os.str());
    }
    blocks = runs->blocks;
    return runs->order;
  };
  out.order_u = order_at(u, out.blocks_u);
  out.order_v = order_at(v, out.blocks_v);
  if (out.order_u && out.order_v) {
    std::vector<std::size_t> reversed(out.order_v->rbegin(), out.order_v->rend());
    auto as_cycle = [](const std::vector<std::size_t>& xs) {
      Cycle c;
      for (std::size_t x : xs) c.push_back({eid(static_cast<int>(x)), 0});
      return c;
    };
    if (!same_cyclic_order(as_cycle(*out.order_u), as_cycle(reversed)))
      throw Error(ErrorCode::ClaimBViolated, "part orders around u and v are not inverse");
  }
  return out;
}

EmbedResult glue_at_edge(const EmbedResult& outer, const EmbedResult& inner, VertexId u, VertexId v,
                         EdgeId glue, EdgeId inner_virtual, bool keep_glue) {
  auto block_after = [&](VertexId x, std::uint8_t side) {
    auto cyc = starting_at(inner.rotation.at(x), {inner_virtual, side});
    if (!cyc) throw Error(ErrorCode::NoFaceWithEdge, "inner embedding lacks the virtual edge");
    return Cycle(cyc->begin() + 1, cyc->end());
  };
  auto outer_u = starting_at(outer.rotation.at(u), {glue, 0});
  auto outer_v = starting_at(outer.rotation.at(v), {glue, 1});
  if (!outer_u || !outer_v) throw Error(ErrorCode::NoFaceWithEdge, "outer embedding lacks glue edge");

  Cycle at_u = *outer_u;
  const Cycle inner_u = block_after(u, 0);
  at_u.insert(at_u.end(), inner_u.begin(), inner_u.end());
  Cycle at_v = *outer_v;
  const Cycle inner_v = block_after(v, 1);
  at_v.insert(at_v.begin() + 1, inner_v.begin(), inner_v.end());
  if (!keep_glue) {
    at_u.erase(at_u.begin());
    at_v.erase(at_v.begin());
  }
  EmbedResult out = merged(outer, inner);
  out.rotation.set(u, std::move(at_u));
  out.rotation.set(v, std::move(at_v));
  return out;
}

EmbedResult case3_three_connected(const ParityDrawing& d, const std::set<VertexId>& w,
                                  Case3Stats* stats) {
  Case3Stats local;
  ParityDrawing even = d;
  for (VertexId v : d.graph.vertices()) {
    if (is_even_vertex(even, v)) continue;
    if (w.contains(v)) throw Error(ErrorCode::HypothesisViolated, "odd pair at a vertex of W");
    const EdgeId anchor = d.graph.incident(v).front();
    EvenStats s;
    try {
      even = make_vertex_even(even, v, anchor, &s);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::OddVertexAfterAdjustment) throw;
      // Diagnostic: the disjoint-path structure a 3-connected graph guarantees.
      std::ostringstream os;
      os << err.what();
      const Cycle& rot = d.rotation.at(v);
      if (rot.size() >= 4) {
        Multigraph rest = d.graph.without_vertices({v});
        auto far = [&](std::size_t i) { return d.graph.edge(rot[i].edge).other(v); };
        auto paths = two_disjoint_paths(rest, {far(0), far(2)}, {far(1), far(3)});
        os << "; disjoint paths in G-v " << (paths ? "exist" : "do not exist");
      }
      throw Error(ErrorCode::OddVertexAfterAdjustment, os.str());
    }
    const std::size_t deg = d.graph.degree(v);
    if (s.swaps > deg * (deg - 1) / 2) local.swap_bound_held = false;
    ++local.adjusted_vertices;
    local.pulls += s.pulls;
    local.swaps += s.swaps;
  }
  if (stats) *stats = local;
  if (!is_planar_rotation(even.rotation))
    throw Error(ErrorCode::WeakHTViolated, "even drawing whose rotation system is not planar");
  return {even.rotation, even_vertices(d)};
}

namespace {

class Embedder {
 public:
  Embedder(const std::set<VertexId>& w, EdgeId first_fresh, EmbedTrace* trace)
      : w_(w), next_edge_(raw(first_fresh)), trace_(trace) {}

  EmbedResult run(const ParityDrawing& d, int depth) {
    if (!satisfies_hypotheses(d, restricted_w(d.graph)))
      throw Error(ErrorCode::Internal, "recursive drawing violates the hypotheses");
    EmbedResult out = dispatch(d, depth);
    out.preserved = even_vertices(d);
    if (!is_planar_rotation(out.rotation))
      throw Error(ErrorCode::Internal, "sub-embedding is not planar");
    for (VertexId v : out.preserved) {
      if (!same_cyclic_order(out.rotation.at(v), d.rotation.at(v))) {
        std::ostringstream os;
        os << "rotation at even vertex " << v << " was not preserved";
        throw Error(ErrorCode::Internal, os.str());
      }
    }
    return out;
  }

 private:
  std::set<VertexId> restricted_w(const Multigraph& g) const {
    std::set<VertexId> out;
    for (VertexId v : w_)
      if (g.has_vertex(v)) out.insert(v);
    return out;
  }

  void note(int depth, std::string kind, std::vector<VertexId> junction, const Multigraph& g,
            std::string detail = {}) {
    if (!trace_) return;
    trace_->steps.push_back(
        {depth, std::move(kind), std::move(junction), g.vertex_count(), g.edge_count(), std::move(detail)});
  }

  EmbedResult dispatch(const ParityDrawing& d, int depth) {
    const Multigraph& g = d.graph;
    if (g.vertex_count() <= 1) {
      note(depth, "trivial", {}, g);
      return {d.rotation, {}};
    }
    auto comps = connected_components(g);
    if (comps.size() > 1) {
      note(depth, "case0", {}, g, std::to_string(comps.size()) + " components");
      std::vector<EmbedResult> parts;
      for (const auto& comp : comps)
        parts.push_back(run(restrict(d, g.induced({comp.begin(), comp.end()})), depth + 1));
      return case0_disjoint_union(parts);
    }
    auto cuts = cut_vertices(g);
    if (!cuts.empty()) return case1(d, *cuts.begin(), depth);
    if (g.vertex_count() >= 4) {
      auto pairs = separation_pairs(g);
      if (!pairs.empty()) return case2(d, pairs.front().first, pairs.front().second, depth);
    }
    Case3Stats stats;
    EmbedResult out = case3_three_connected(d, restricted_w(g), &stats);
    note(depth, "case3", {}, g, "adjusted " + std::to_string(stats.adjusted_vertices) + " vertices, " +
                                    std::to_string(stats.swaps) + " swaps");
    return out;
  }

  EmbedResult case1(const ParityDrawing& d, VertexId v, int depth) {
    const Multigraph& g = d.graph;
    SplitAtVertex split = split_at_cut_vertex(g, v);
    if (!is_even_vertex(d, v)) {
      note(depth, "case1", {v}, g, "odd cut vertex, star gluing of " +
                                       std::to_string(split.parts.size()) + " parts");
      EmbedResult acc = run(restrict(d, split.parts[0]), depth + 1);
      for (std::size_t i = 1; i < split.parts.size(); ++i)
        acc = glue_at_vertex(acc, run(restrict(d, split.parts[i]), depth + 1), v, nullptr);
      return acc;
    }
    ClaimA claim = claim_a_consecutive_part(d, v, split);
    note(depth, "case1", {v}, g, "even cut vertex, consecutive part " + std::to_string(claim.part));
    const Multigraph& inner_graph = split.parts[claim.part];
    std::set<VertexId> rest;
    for (VertexId x : g.vertices())
      if (x == v || !inner_graph.has_vertex(x)) rest.insert(x);
    EmbedResult inner = run(restrict(d, inner_graph), depth + 1);
    EmbedResult outer = run(restrict(d, g.induced(rest)), depth + 1);
    return glue_at_vertex(outer, inner, v, &d.rotation.at(v));
  }

  EmbedResult case2(const ParityDrawing& d, VertexId u, VertexId v, int depth) {
    const Multigraph& g = d.graph;
    SplitAtPair split = split_at_pair(g, u, v, eid(next_edge_));
    next_edge_ += static_cast<int>(split.virtual_edges.size()) + 1;
    const auto parts = indexed_parts(split);
    const std::size_t offset = split.degenerate ? 1 : 0;

    ClaimB claim = claim_b_check(d, u, v, split);

    std::vector<std::size_t> order;
    std::string detail;
    if (claim.order_u) {
      order = *claim.order_u;
      detail = "order from u";
    } else if (claim.order_v) {
      order.assign(claim.order_v->rbegin(), claim.order_v->rend());
      detail = "order from v";
    } else {
      for (std::size_t i = 0; i < parts.size(); ++i) order.push_back(i);
      detail = "free order";
    }
    note(depth, "case2", {u, v}, g,
         detail + ", " + std::to_string(parts.size()) + " parts" +
             (split.uv_in_graph ? " including uv" : ""));

    // parts[index] is embedded together with the virtual edge virtual_of[index].
    std::vector<EdgeId> virtual_of(parts.size());
    std::vector<EmbedResult> embedded(parts.size());
    if (split.degenerate) {
      const EdgeId uv = split.degenerate->edges().begin()->first;
      const EdgeId glue = eid(raw(split.virtual_edges.back()) + 1);
      virtual_of[0] = glue;
      RotationSystem bigon;
      bigon.set(u, {{glue, 0}, end_at(g, uv, u)});
      bigon.set(v, {{glue, 1}, end_at(g, uv, v)});
      embedded[0] = {bigon, {}};
    }
    for (std::size_t k = 0; k < split.parts.size(); ++k) {
      const std::size_t index = k + offset;
      Path path;
      if (split.degenerate) {
        const EdgeId uv = split.degenerate->edges().begin()->first;
        path = {{u, v}, {uv}};
      } else {
        path = path_between(split.parts[k == 0 ? 1 : 0], u, v);
      }
      const EdgeId virt = split.virtual_edges[k];
      virtual_of[index] = virt;
      Routing routing = route_edge_along_path(d, split.parts[k], u, v, path, virt);
      embedded[index] = run(routed_drawing(d, split.parts[k], u, v, routing), depth + 1);
    }

    EmbedResult acc = embedded[order[0]];
    const EdgeId glue = virtual_of[order[0]];
    for (std::size_t k = 1; k < order.size(); ++k) {
      const bool last = k + 1 == order.size();
      acc = glue_at_edge(acc, embedded[order[k]], u, v, glue, virtual_of[order[k]], !last);
    }
    return acc;
  }

  std::set<VertexId> w_;
  int next_edge_;
  EmbedTrace* trace_;
};

}  // namespace

void align_preserved(EmbedResult& result, const RotationSystem& reference) {
  for (VertexId v : result.preserved) {
    const Cycle& ref = reference.at(v);
    if (!same_cyclic_order(result.rotation.at(v), ref))
      throw Error(ErrorCode::Internal, "preserved cycle differs from the reference");
    result.rotation.set(v, ref);
  }
}

EmbedResult embed_unified(const EmbedRequest& request, EmbedTrace* trace) {
  const ParityDrawing& d = request.drawing;
  check_drawing(d);
  if (!d.graph.is_simple())
    throw Error(ErrorCode::NotSimple, "embed multigraphs through the reduction");
  for (VertexId x : request.w)
    if (!d.graph.has_vertex(x)) throw Error(ErrorCode::UnknownVertex, "W vertex not in graph");
  if (!satisfies_hypotheses(d, request.w)) {
    std::ostringstream os;
    os << "drawing has an odd independent pair or an odd pair at a W vertex";
    throw Error(ErrorCode::HypothesisViolated, os.str());
  }
  Embedder embedder(request.w, d.graph.fresh_edge_id(), trace);
  EmbedResult out = embedder.run(d, 0);
  for (VertexId x : request.w)
    if (!out.preserved.contains(x)) throw Error(ErrorCode::Internal, "W vertex not preserved");
  align_preserved(out, d.rotation);
  return out;
}

}  // namespace uht
