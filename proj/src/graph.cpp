#include "uht/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace uht {

void Multigraph::add_vertex(VertexId v) {
  if (raw(v) < 0) throw Error(ErrorCode::UnknownVertex, "negative vertex id");
  vertices_.insert(v);
  incidence_.try_emplace(v);
}

void Multigraph::add_edge(EdgeId e, VertexId a, VertexId b) {
  if (raw(e) < 0) throw Error(ErrorCode::UnknownEdge, "negative edge id");
  if (!has_vertex(a) || !has_vertex(b)) {
    std::ostringstream os;
    os << "edge " << e << " has a dangling endpoint";
    throw Error(ErrorCode::UnknownVertex, os.str());
  }
  if (!edges_.emplace(e, Edge{a, b}).second) {
    std::ostringstream os;
    os << "duplicate edge id " << e;
    throw Error(ErrorCode::Parse, os.str());
  }
  auto insert_sorted = [e](std::vector<EdgeId>& list) {
    list.insert(std::lower_bound(list.begin(), list.end(), e), e);
  };
  insert_sorted(incidence_[a]);
  if (b != a) insert_sorted(incidence_[b]);
}

void Multigraph::remove_edge(EdgeId e) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw Error(ErrorCode::UnknownEdge, "remove_edge");
  for (VertexId x : {it->second.a, it->second.b}) {
    auto& list = incidence_[x];
    list.erase(std::remove(list.begin(), list.end(), e), list.end());
  }
  edges_.erase(it);
}

void Multigraph::remove_vertex(VertexId v) {
  if (!has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "remove_vertex");
  for (EdgeId e : std::vector<EdgeId>(incident(v))) remove_edge(e);
  vertices_.erase(v);
  incidence_.erase(v);
}

const Edge& Multigraph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) {
    std::ostringstream os;
    os << "edge " << e;
    throw Error(ErrorCode::UnknownEdge, os.str());
  }
  return it->second;
}

const std::vector<EdgeId>& Multigraph::incident(VertexId v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) {
    std::ostringstream os;
    os << "vertex " << v;
    throw Error(ErrorCode::UnknownVertex, os.str());
  }
  return it->second;
}

std::vector<EdgeEnd> Multigraph::ends_at(VertexId v) const {
  std::vector<EdgeEnd> ends;
  for (EdgeId e : incident(v)) {
    const Edge& ed = edge(e);
    if (ed.a == v) ends.push_back({e, 0});
    if (ed.b == v) ends.push_back({e, 1});
  }
  return ends;
}

std::size_t Multigraph::degree(VertexId v) const {
  std::size_t d = 0;
  for (EdgeId e : incident(v)) d += edge(e).is_loop() ? 2 : 1;
  return d;
}

bool Multigraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [id, ed] : edges_) {
    if (ed.is_loop()) return false;
    if (!seen.insert(std::minmax(ed.a, ed.b)).second) return false;
  }
  return true;
}

bool Multigraph::adjacent(EdgeId e, EdgeId f) const {
  const Edge& x = edge(e);
  const Edge& y = edge(f);
  return x.touches(y.a) || x.touches(y.b);
}

std::optional<EdgeId> Multigraph::edge_between(VertexId u, VertexId v) const {
  for (EdgeId e : incident(u)) {
    const Edge& ed = edge(e);
    if ((ed.a == u && ed.b == v) || (ed.a == v && ed.b == u)) return e;
  }
  return std::nullopt;
}

VertexId Multigraph::fresh_vertex_id() const {
  return vertices_.empty() ? vid(0) : vid(raw(*vertices_.rbegin()) + 1);
}

EdgeId Multigraph::fresh_edge_id() const {
  return edges_.empty() ? eid(0) : eid(raw(edges_.rbegin()->first) + 1);
}

Multigraph Multigraph::induced(const std::set<VertexId>& keep) const {
  Multigraph h;
  for (VertexId v : keep) {
    if (!has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "induced");
    h.add_vertex(v);
  }
  for (const auto& [id, ed] : edges_)
    if (keep.contains(ed.a) && keep.contains(ed.b)) h.add_edge(id, ed.a, ed.b);
  return h;
}

Multigraph Multigraph::without_vertices(const std::set<VertexId>& drop) const {
  std::set<VertexId> keep;
  for (VertexId v : vertices_)
    if (!drop.contains(v)) keep.insert(v);
  return induced(keep);
}

bool Multigraph::is_subgraph_of(const Multigraph& other) const {
  for (VertexId v : vertices_)
    if (!other.has_vertex(v)) return false;
  for (const auto& [id, ed] : edges_) {
    if (!other.has_edge(id)) return false;
    if (!(other.edge(id) == ed)) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (VertexId start : g.vertices()) {
    if (seen.contains(start)) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (EdgeId e : g.incident(x)) {
        VertexId y = g.edge(e).other(x);
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() <= 1; }

std::set<VertexId> cut_vertices(const Multigraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "cut_vertices");
  std::set<VertexId> cuts;
  if (g.vertex_count() == 0) return cuts;
  std::map<VertexId, int> order;
  std::map<VertexId, int> low;
  int clock = 0;

  std::function<void(VertexId, std::optional<EdgeId>)> dfs = [&](VertexId x,
                                                                 std::optional<EdgeId> via) {
    order[x] = low[x] = clock++;
    int children = 0;
    for (EdgeId e : g.incident(x)) {
      if (via && e == *via) continue;
      VertexId y = g.edge(e).other(x);
      if (y == x) continue;
      if (auto it = order.find(y); it != order.end()) {
        low[x] = std::min(low[x], it->second);
        continue;
      }
      ++children;
      dfs(y, e);
      low[x] = std::min(low[x], low[y]);
      if (via && low[y] >= order[x]) cuts.insert(x);
    }
    if (!via && children >= 2) cuts.insert(x);
  };
  dfs(*g.vertices().begin(), std::nullopt);
  return cuts;
}

std::vector<std::pair<VertexId, VertexId>> separation_pairs(const Multigraph& g) {
  if (!is_connected(g) || !cut_vertices(g).empty())
    throw Error(ErrorCode::NotTwoConnected, "separation_pairs");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (connected_components(g.without_vertices({vs[i], vs[j]})).size() >= 2)
        pairs.emplace_back(vs[i], vs[j]);
  return pairs;
}

SplitAtVertex split_at_cut_vertex(const Multigraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "split_at_cut_vertex");
  auto comps = connected_components(g.without_vertices({v}));
  if (!is_connected(g) || comps.size() < 2)
    throw Error(ErrorCode::NotCutVertex, "vertex does not separate the graph");
  SplitAtVertex split{v, {}};
  for (const auto& comp : comps) {
    std::set<VertexId> keep(comp.begin(), comp.end());
    keep.insert(v);
    Multigraph part = g.induced(keep);
    for (EdgeId e : g.incident(v))
      if (g.edge(e).is_loop()) part.remove_edge(e);
    split.parts.push_back(std::move(part));
  }
  // Loops at the cut vertex belong to no component; they ride with the first part.
  for (EdgeId e : g.incident(v))
    if (g.edge(e).is_loop()) split.parts.front().add_edge(e, v, v);
  return split;
}

SplitAtPair split_at_pair(const Multigraph& g, VertexId u, VertexId v, EdgeId first_virtual) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
    throw Error(ErrorCode::NotSeparationPair, "invalid pair");
  auto comps = connected_components(g.without_vertices({u, v}));
  if (comps.size() < 2) throw Error(ErrorCode::NotSeparationPair, "pair does not separate");

  SplitAtPair split;
  split.u = u;
  split.v = v;
  int next_virtual = raw(first_virtual);
  for (const auto& comp : comps) {
    std::set<VertexId> inner(comp.begin(), comp.end());
    Multigraph part;
    part.add_vertex(u);
    part.add_vertex(v);
    for (VertexId x : inner) part.add_vertex(x);
    for (const auto& [id, ed] : g.edges()) {
      bool in_a = inner.contains(ed.a);
      bool in_b = inner.contains(ed.b);
      if ((in_a || in_b) && (in_a || ed.a == u || ed.a == v) && (in_b || ed.b == u || ed.b == v))
        part.add_edge(id, ed.a, ed.b);
    }
    if (path_between(part, u, v).edges.empty())
      throw Error(ErrorCode::NotTwoConnected, "part without a u-v path");
    Multigraph aug = part;
    EdgeId virt = eid(next_virtual++);
    aug.add_edge(virt, u, v);
    split.parts.push_back(std::move(part));
    split.augmented.push_back(std::move(aug));
    split.virtual_edges.push_back(virt);
  }
  Multigraph degenerate;
  degenerate.add_vertex(u);
  degenerate.add_vertex(v);
  for (const auto& [id, ed] : g.edges()) {
    if ((ed.a == u && ed.b == v) || (ed.a == v && ed.b == u)) {
      degenerate.add_edge(id, ed.a, ed.b);
      split.uv_in_graph = true;
    }
  }
  if (split.uv_in_graph) split.degenerate = std::move(degenerate);
  return split;
}

Path path_between(const Multigraph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "path_between");
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
  std::deque<VertexId> queue{u};
  std::set<VertexId> seen{u};
  while (!queue.empty() && !seen.contains(v)) {
    VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      VertexId y = g.edge(e).other(x);
      if (seen.insert(y).second) {
        parent[y] = {x, e};
        queue.push_back(y);
      }
    }
  }
  if (!seen.contains(v)) throw Error(ErrorCode::NoPath, "vertices are not connected");
  Path path;
  for (VertexId x = v; x != u; x = parent[x].first) {
    path.vertices.push_back(x);
    path.edges.push_back(parent[x].second);
  }
  path.vertices.push_back(u);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

std::optional<std::pair<Path, Path>> two_disjoint_paths(const Multigraph& g,
                                                        std::pair<VertexId, VertexId> from,
                                                        std::pair<VertexId, VertexId> to) {
  // Unit vertex capacities via in/out splitting; node 2i is in(x), 2i+1 is out(x).
  const std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, int> index;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) index[vs[i]] = i;
  for (VertexId x : {from.first, from.second, to.first, to.second})
    if (!index.contains(x)) throw Error(ErrorCode::UnknownVertex, "two_disjoint_paths");

  struct Arc {
    int to;
    int cap;
    int orig;
    int rev;
    EdgeId edge;
  };
  const int source = 2 * static_cast<int>(vs.size());
  const int sink = source + 1;
  std::vector<std::vector<Arc>> net(sink + 1);
  auto add_arc = [&](int a, int b, EdgeId e) {
    net[a].push_back({b, 1, 1, static_cast<int>(net[b].size()), e});
    net[b].push_back({a, 0, 0, static_cast<int>(net[a].size()) - 1, e});
  };
  const EdgeId none = eid(-1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) add_arc(2 * i, 2 * i + 1, none);
  for (const auto& [id, ed] : g.edges()) {
    if (ed.is_loop()) continue;
    add_arc(2 * index[ed.a] + 1, 2 * index[ed.b], id);
    add_arc(2 * index[ed.b] + 1, 2 * index[ed.a], id);
  }
  add_arc(source, 2 * index[from.first], none);
  add_arc(source, 2 * index[from.second], none);
  add_arc(2 * index[to.first] + 1, sink, none);
  add_arc(2 * index[to.second] + 1, sink, none);

  for (int round = 0; round < 2; ++round) {
    std::vector<std::pair<int, int>> prev(net.size(), {-1, -1});
    std::deque<int> queue{source};
    prev[source] = {source, -1};
    while (!queue.empty() && prev[sink].first < 0) {
      int x = queue.front();
      queue.pop_front();
      for (int k = 0; k < static_cast<int>(net[x].size()); ++k) {
        const Arc& arc = net[x][k];
        if (arc.cap > 0 && prev[arc.to].first < 0) {
          prev[arc.to] = {x, k};
          queue.push_back(arc.to);
        }
      }
    }
    if (prev[sink].first < 0) return std::nullopt;
    for (int y = sink; y != source;) {
      auto [x, k] = prev[y];
      Arc& arc = net[x][k];
      arc.cap -= 1;
      net[y][arc.rev].cap += 1;
      y = x;
    }
  }

  // Flow decomposition: follow saturated forward arcs from the source.
  std::vector<Path> paths;
  for (Arc& start : net[source]) {
    if (start.orig != 1 || start.cap != 0) continue;
    Path path;
    int node = start.to;
    while (node != sink) {
      auto it = std::find_if(net[node].begin(), net[node].end(),
                             [](const Arc& a) { return a.orig == 1 && a.cap == 0; });
      if (it == net[node].end()) return std::nullopt;
      if (node % 2 == 0) path.vertices.push_back(vs[node / 2]);
      else if (it->to != sink) path.edges.push_back(it->edge);
      it->cap = 1;  // consumed
      node = it->to;
    }
    paths.push_back(std::move(path));
  }
  if (paths.size() != 2) return std::nullopt;
  return std::make_pair(std::move(paths[0]), std::move(paths[1]));
}

}  // namespace uht
