#pragma once

#include <initializer_list>
#include <queue>
#include <utility>

#include "uht/drawing.hpp"

namespace uht::test {

/// Vertices 0..n-1 and edges numbered in list order.
inline Multigraph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(vid(v));
  int next = 0;
  for (auto [a, b] : edges) g.add_edge(eid(next++), vid(a), vid(b));
  return g;
}

/// Ends at v given by edge id; non-loop edges only.
inline Cycle ends(const Multigraph& g, VertexId v, std::initializer_list<int> edges) {
  Cycle out;
  for (int e : edges) out.push_back({eid(e), static_cast<std::uint8_t>(g.edge(eid(e)).a == v ? 0 : 1)});
  return out;
}

/// Plain BFS component count, kept separate from the library's routine.
inline int count_components(const Multigraph& g, const std::set<VertexId>& drop = {}) {
  std::set<VertexId> seen;
  int count = 0;
  for (VertexId s : g.vertices()) {
    if (drop.contains(s) || seen.contains(s)) continue;
    ++count;
    std::queue<VertexId> q;
    q.push(s);
    seen.insert(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (const auto& [e, ed] : g.edges()) {
        if (!ed.touches(x)) continue;
        VertexId y = ed.other(x);
        if (drop.contains(y) || seen.contains(y)) continue;
        seen.insert(y);
        q.push(y);
      }
    }
  }
  return count;
}

}  // namespace uht::test
