#include "uht/reduce.hpp"

#include <algorithm>
#include <map>
#include <json.hpp>
#include <sstream>

namespace uht {

std::string ReductionLog::to_json_lines() const {
  std::ostringstream os;
  for (const auto& s : subdivisions) {
    nlohmann::json j = {{"kind", "subdivide"},
                        {"edge", raw(s.edge)},
                        {"side", s.side == 0 ? "a" : "b"},
                        {"at", raw(s.at)},
                        {"hub", raw(s.hub)},
                        {"stub", raw(s.stub)}};
    os << j.dump() << '\n';
  }
  for (const auto& r : removed) {
    nlohmann::json j = {{"kind", r.anchor ? "parallel" : "loop"},
                        {"edge", raw(r.edge)},
                        {"a", raw(r.a)},
                        {"b", raw(r.b)}};
    if (r.anchor) j["anchor"] = raw(*r.anchor);
    os << j.dump() << '\n';
  }
  nlohmann::json wj = nlohmann::json::array();
  for (VertexId v : w) wj.push_back(raw(v));
  os << nlohmann::json{{"kind", "w"}, {"vertices", wj}}.dump() << '\n';
  return os.str();
}

Reduction reduce(const ParityDrawing& d, const std::set<VertexId>& w, const ReduceOptions& options) {
  check_drawing(d);
  for (VertexId v : w)
    if (!d.graph.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "W vertex not in graph");
  if (options.check_hypotheses && !satisfies_hypotheses(d, w))
    throw Error(ErrorCode::HypothesisViolated,
                "drawing has an odd independent pair or an odd pair at a W vertex");

  Reduction out;
  out.log.w = w;
  out.log.original = d.rotation;
  if (d.graph.is_simple()) {
    out.drawing = d;
    return out;
  }

  std::set<VertexId> protect = w;
  if (options.subdivide_all_even) {
    auto even = even_vertices(d);
    protect.insert(even.begin(), even.end());
  }

  // Rebuild the graph so edge endpoints can move to the hubs.
  Multigraph g;
  for (VertexId v : d.graph.vertices()) g.add_vertex(v);
  RotationSystem rot = d.rotation;
  int next_vertex = raw(d.graph.fresh_vertex_id());
  int next_edge = raw(d.graph.fresh_edge_id());
  std::vector<std::pair<EdgeId, std::pair<VertexId, VertexId>>> stubs;

  for (const auto& [e, ed] : d.graph.edges()) {
    VertexId ends[2] = {ed.a, ed.b};
    for (std::uint8_t side = 0; side < 2; ++side) {
      const VertexId at = ed.at(side);
      if (!protect.contains(at)) continue;
      Subdivision s{e, side, at, vid(next_vertex++), eid(next_edge++)};
      g.add_vertex(s.hub);
      stubs.push_back({s.stub, {at, s.hub}});
      Cycle& cycle = rot.at(at);
      *std::find(cycle.begin(), cycle.end(), EdgeEnd{e, side}) = EdgeEnd{s.stub, 0};
      rot.set(s.hub, {EdgeEnd{s.stub, 1}, EdgeEnd{e, side}});
      ends[side] = s.hub;
      out.log.subdivisions.push_back(s);
    }
    g.add_edge(e, ends[0], ends[1]);
  }
  for (const auto& [s, uv] : stubs) g.add_edge(s, uv.first, uv.second);

  // Strip loops and every parallel copy but the least.
  std::map<std::pair<VertexId, VertexId>, EdgeId> anchors;
  std::vector<EdgeId> drop;
  for (const auto& [e, ed] : g.edges()) {
    if (ed.is_loop()) {
      out.log.removed.push_back({e, ed.a, ed.b, std::nullopt});
      drop.push_back(e);
      continue;
    }
    auto [it, fresh] = anchors.emplace(std::minmax(ed.a, ed.b), e);
    if (!fresh) {
      out.log.removed.push_back({e, ed.a, ed.b, it->second});
      drop.push_back(e);
    }
  }
  for (EdgeId e : drop) {
    const Edge ed = g.edge(e);
    g.remove_edge(e);
    for (VertexId x : {ed.a, ed.b}) {
      Cycle& cycle = rot.at(x);
      std::erase_if(cycle, [&](const EdgeEnd& end) { return end.edge == e; });
    }
  }

  out.drawing.graph = std::move(g);
  out.drawing.rotation = std::move(rot);
  for (const auto& [e, f] : d.parity.odd_pairs())
    if (out.drawing.graph.has_edge(e) && out.drawing.graph.has_edge(f))
      out.drawing.parity.set(e, f, true);
  return out;
}

EmbedResult reinsert_and_contract(const EmbedResult& reduced, const ReductionLog& log) {
  RotationSystem rot = reduced.rotation;
  auto end_of = [](const RemovedEdge& r, VertexId x) {
    return EdgeEnd{r.edge, static_cast<std::uint8_t>(r.a == x ? 0 : 1)};
  };

  for (auto it = log.removed.rbegin(); it != log.removed.rend(); ++it) {
    const RemovedEdge& r = *it;
    if (!r.anchor) {
      Cycle& cycle = rot.at(r.a);
      const EdgeEnd pair[2] = {{r.edge, 0}, {r.edge, 1}};
      cycle.insert(cycle.begin() + (cycle.empty() ? 0 : 1), pair, pair + 2);
      continue;
    }
    // Clockwise of the anchor at one end and counterclockwise at the other
    // closes a bigon; the anchor sides are looked up from the cycles.
    auto anchor_at = [&](VertexId x) {
      const Cycle& cycle = rot.at(x);
      auto pos = std::find_if(cycle.begin(), cycle.end(), [&](const EdgeEnd& end) {
        return end.edge == *r.anchor;
      });
      if (pos == cycle.end()) throw Error(ErrorCode::ReinsertionBroken, "anchor copy missing");
      return static_cast<std::size_t>(pos - cycle.begin());
    };
    Cycle& at_a = rot.at(r.a);
    at_a.insert(at_a.begin() + static_cast<long>(anchor_at(r.a)) + 1, end_of(r, r.a));
    Cycle& at_b = rot.at(r.b);
    at_b.insert(at_b.begin() + static_cast<long>(anchor_at(r.b)), end_of(r, r.b));
  }
  if (!is_planar_rotation(rot))
    throw Error(ErrorCode::ReinsertionBroken, "reinsertion raised the genus");

  for (const Subdivision& s : log.subdivisions) {
    Cycle& cycle = rot.at(s.at);
    auto pos = std::find(cycle.begin(), cycle.end(), EdgeEnd{s.stub, 0});
    if (pos == cycle.end()) throw Error(ErrorCode::ReinsertionBroken, "stub end missing");
    *pos = EdgeEnd{s.edge, s.side};
    rot.erase(s.hub);
  }
  if (!is_planar_rotation(rot))
    throw Error(ErrorCode::ReinsertionBroken, "contraction raised the genus");

  EmbedResult out;
  out.rotation = std::move(rot);
  for (const auto& [v, cycle] : out.rotation.cycles()) {
    if (!log.original.has(v)) throw Error(ErrorCode::ReinsertionBroken, "unexpected vertex left");
    if (same_cyclic_order(cycle, log.original.at(v))) out.preserved.insert(v);
  }
  for (VertexId v : log.w)
    if (!out.preserved.contains(v))
      throw Error(ErrorCode::ReinsertionBroken, "rotation at a W vertex changed");
  align_preserved(out, log.original);
  return out;
}

EmbedResult embed_multigraph(const EmbedRequest& request, EmbedTrace* trace, ReductionLog* log) {
  Reduction r = reduce(request.drawing, request.w);
  EmbedResult inner = embed_unified({r.drawing, request.w}, trace);
  EmbedResult out = reinsert_and_contract(inner, r.log);
  if (log) *log = std::move(r.log);
  return out;
}

}  // namespace uht
