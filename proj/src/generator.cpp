#include "uht/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace uht {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Corner of a face: the new end goes right after `after` in the cycle at `at`.
struct Corner {
  VertexId at;
  EdgeEnd after;
};

std::optional<PlanarInstance> attempt_planar(int n, int m, Rng& rng) {
  PlanarInstance out;
  for (int v = 0; v < n; ++v) {
    out.graph.add_vertex(vid(v));
    out.rotation.set(vid(v), {});
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  int next = 0;
  auto insert_end = [&](VertexId x, EdgeEnd end) {
    Cycle& cycle = out.rotation.at(x);
    cycle.insert(cycle.begin() + static_cast<long>(cycle.empty() ? 0 : pick(rng, cycle.size())), end);
  };
  const int tree = std::min(m, n - 1);
  for (int k = 1; k <= tree; ++k) {
    const VertexId leaf = vid(order[k]);
    const VertexId parent = vid(order[pick(rng, k)]);
    const EdgeId e = eid(next++);
    out.graph.add_edge(e, parent, leaf);
    insert_end(parent, {e, 0});
    insert_end(leaf, {e, 1});
  }

  while (next < m) {
    const FaceSet fs = faces(out.rotation);
    std::vector<std::size_t> face_order(fs.faces.size());
    std::iota(face_order.begin(), face_order.end(), 0);
    std::shuffle(face_order.begin(), face_order.end(), rng);
    bool placed = false;
    for (std::size_t fi : face_order) {
      const auto& darts = fs.faces[fi];
      std::vector<Corner> corners;
      for (std::size_t i = 0; i < darts.size(); ++i) {
        const EdgeEnd arriving = darts[i].opposite();
        corners.push_back({out.graph.edge(arriving.edge).at(arriving.side), arriving});
      }
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t i = 0; i < corners.size(); ++i)
        for (std::size_t j = i + 1; j < corners.size(); ++j)
          if (corners[i].at != corners[j].at && !out.graph.edge_between(corners[i].at, corners[j].at))
            options.push_back({i, j});
      if (options.empty()) continue;
      auto [i, j] = options[pick(rng, options.size())];
      const EdgeId e = eid(next++);
      out.graph.add_edge(e, corners[i].at, corners[j].at);
      for (auto [c, side] : {std::pair{corners[i], std::uint8_t{0}}, std::pair{corners[j], std::uint8_t{1}}}) {
        Cycle& cycle = out.rotation.at(c.at);
        cycle.insert(cycle.begin() + static_cast<long>(position_of(cycle, c.after)) + 1, EdgeEnd{e, side});
      }
      placed = true;
      break;
    }
    if (!placed) return std::nullopt;
  }
  if (!is_planar_rotation(out.rotation)) throw Error(ErrorCode::Internal, "generated map is not planar");
  return out;
}

Rational rational_of(double x) {
  // Six decimals is plenty for convex layouts.
  return Rational(static_cast<long long>(std::llround(x * 1e6)), 1000000LL);
}

PlanarInstance from_coords(const Multigraph& g, const std::map<VertexId, Point>& coords) {
  ParityDrawing d = to_parity_drawing(straight_line_drawing(g, coords));
  if (d.parity.odd_count() != 0 || !is_planar_rotation(d.rotation))
    throw Error(ErrorCode::Internal, "layout is not a plane drawing");
  return {d.graph, d.rotation};
}

}  // namespace

PlanarInstance random_planar_rotation(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 0) throw Error(ErrorCode::Unsatisfiable, "negative size");
  const long cap = n >= 3 ? 3L * n - 6 : (n == 2 ? 1 : 0);
  if (m > cap) throw Error(ErrorCode::Unsatisfiable, "too many edges for a simple planar graph");
  Rng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt)
    if (auto out = attempt_planar(n, m, rng)) return *out;
  throw Error(ErrorCode::Unsatisfiable, "could not reach the requested edge count");
}

ParityDrawing scramble(const ParityDrawing& d, const std::set<VertexId>& w, std::size_t k,
                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> candidates;
  for (VertexId v : d.graph.vertices())
    if (!w.contains(v) && d.graph.degree(v) >= 2) candidates.push_back(v);
  ParityDrawing out = d;
  if (candidates.empty()) return out;
  auto harmful = [&](VertexId v, std::size_t i) {
    const Cycle& cycle = out.rotation.at(v);
    const EdgeEnd x = cycle[i];
    const EdgeEnd y = cycle[(i + 1) % cycle.size()];
    if (x.edge == y.edge) return false;
    const Edge& ex = out.graph.edge(x.edge);
    const Edge& ey = out.graph.edge(y.edge);
    for (VertexId t : {ex.a, ex.b})
      if (t != v && w.contains(t) && ey.touches(t)) return true;
    return false;
  };
  std::size_t done = 0;
  for (std::size_t tries = 0; done < k && tries < 20 * k + 20; ++tries) {
    const VertexId v = candidates[pick(rng, candidates.size())];
    const std::size_t i = pick(rng, out.rotation.at(v).size());
    if (harmful(v, i)) continue;
    out = adjacent_swap(out, v, i);
    ++done;
  }
  if (!satisfies_hypotheses(out, w)) throw Error(ErrorCode::Internal, "scramble broke the hypotheses");
  return out;
}

PlanarInstance random_planar_multigraph(int n, int m, int max_copies, int loops, std::uint64_t seed) {
  PlanarInstance out = random_planar_rotation(n, m, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  int next = raw(out.graph.fresh_edge_id());
  std::vector<EdgeId> base;
  for (const auto& [e, ed] : out.graph.edges()) base.push_back(e);
  if (!base.empty() && max_copies > 1) {
    const std::size_t bundles = 1 + pick(rng, std::min<std::size_t>(3, base.size()));
    for (std::size_t b = 0; b < bundles; ++b) {
      const EdgeId q = base[pick(rng, base.size())];
      const Edge ed = out.graph.edge(q);
      int copies = 1;
      for (const auto& [f, fe] : out.graph.edges())
        if (f != q && std::minmax(fe.a, fe.b) == std::minmax(ed.a, ed.b)) ++copies;
      const int extra = static_cast<int>(pick(rng, static_cast<std::size_t>(max_copies - copies) + 1));
      for (int c = 0; c < extra; ++c) {
        const EdgeId p = eid(next++);
        out.graph.add_edge(p, ed.a, ed.b);
        Cycle& at_a = out.rotation.at(ed.a);
        at_a.insert(at_a.begin() + static_cast<long>(position_of(at_a, {q, 0})) + 1, EdgeEnd{p, 0});
        Cycle& at_b = out.rotation.at(ed.b);
        at_b.insert(at_b.begin() + static_cast<long>(position_of(at_b, {q, 1})), EdgeEnd{p, 1});
      }
    }
  }
  const int count = loops > 0 ? static_cast<int>(pick(rng, static_cast<std::size_t>(loops) + 1)) : 0;
  for (int l = 0; l < count && n > 0; ++l) {
    const VertexId x = vid(static_cast<int>(pick(rng, static_cast<std::size_t>(n))));
    const EdgeId e = eid(next++);
    out.graph.add_edge(e, x, x);
    Cycle& cycle = out.rotation.at(x);
    const long at = cycle.empty() ? 0 : static_cast<long>(pick(rng, cycle.size()));
    const EdgeEnd pair[2] = {{e, 0}, {e, 1}};
    cycle.insert(cycle.begin() + at, pair, pair + 2);
  }
  if (!is_planar_rotation(out.rotation)) throw Error(ErrorCode::Internal, "multigraph map is not planar");
  return out;
}

Multigraph complete_graph(int n) {
  Multigraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(vid(v));
  int next = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(eid(next++), vid(a), vid(b));
  return g;
}

Multigraph complete_bipartite(int a, int b) {
  Multigraph g;
  for (int v = 0; v < a + b; ++v) g.add_vertex(vid(v));
  int next = 0;
  for (int x = 0; x < a; ++x)
    for (int y = a; y < a + b; ++y) g.add_edge(eid(next++), vid(x), vid(y));
  return g;
}

PlanarInstance wheel(int n) {
  if (n < 4) throw Error(ErrorCode::Unsatisfiable, "a wheel needs at least 4 vertices");
  Multigraph g;
  std::map<VertexId, Point> coords;
  g.add_vertex(vid(0));
  coords[vid(0)] = {0, 0};
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    const double t = 2 * M_PI * i / rim;
    g.add_vertex(vid(i + 1));
    coords[vid(i + 1)] = {rational_of(std::cos(t)), rational_of(std::sin(t))};
  }
  int next = 0;
  for (int i = 0; i < rim; ++i) g.add_edge(eid(next++), vid(0), vid(i + 1));
  for (int i = 0; i < rim; ++i) g.add_edge(eid(next++), vid(i + 1), vid((i + 1) % rim + 1));
  return from_coords(g, coords);
}

PlanarInstance theta(int p, int q, int r) {
  if (std::min({p, q, r}) < 1 || (p == 1) + (q == 1) + (r == 1) > 1)
    throw Error(ErrorCode::Unsatisfiable, "theta paths must be nonempty and at most one direct");
  PlanarInstance out;
  const VertexId u = vid(0), v = vid(1);
  out.graph.add_vertex(u);
  out.graph.add_vertex(v);
  int next_v = 2, next_e = 0;
  Cycle at_u, at_v;
  for (int len : {p, q, r}) {
    VertexId prev = u;
    for (int k = 0; k < len; ++k) {
      const VertexId cur = k + 1 == len ? v : vid(next_v++);
      if (cur != v) out.graph.add_vertex(cur);
      const EdgeId e = eid(next_e++);
      out.graph.add_edge(e, prev, cur);
      if (prev == u) at_u.push_back({e, 0});
      else out.rotation.at(prev).push_back({e, 0});
      if (cur == v) at_v.insert(at_v.begin(), EdgeEnd{e, 1});
      else out.rotation.set(cur, {EdgeEnd{e, 1}});
      prev = cur;
    }
  }
  out.rotation.set(u, at_u);
  out.rotation.set(v, at_v);
  if (!is_planar_rotation(out.rotation)) throw Error(ErrorCode::Internal, "theta map is not planar");
  return out;
}

GeometricDrawing random_straight_line_drawing(const Multigraph& g, std::uint64_t seed, int grid) {
  return random_polyline_drawing(g, seed, 0, grid);
}

GeometricDrawing random_polyline_drawing(const Multigraph& g, std::uint64_t seed, int bends, int grid) {
  Rng rng(seed);
  std::uniform_int_distribution<int> coord(0, grid - 1);
  auto point = [&] { return Point{coord(rng), coord(rng)}; };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    GeometricDrawing gd;
    gd.graph = g;
    for (VertexId v : g.vertices()) gd.coords[v] = point();
    for (const auto& [e, ed] : g.edges()) {
      std::vector<Point> line{gd.coords[ed.a]};
      const int count = ed.is_loop() ? std::max(bends, 2) : bends;
      for (int k = 0; k < count; ++k) line.push_back(point());
      line.push_back(gd.coords[ed.b]);
      gd.polylines[e] = std::move(line);
    }
    if (validate_general_position(gd).empty()) return gd;
  }
  throw Error(ErrorCode::GeneralPosition, "no general-position drawing found");
}

ParityDrawing realize_rotations(const ParityDrawing& d, const std::map<VertexId, Cycle>& targets) {
  ParityDrawing out = d;
  for (const auto& [v, target] : targets) {
    const Cycle& now = out.rotation.at(v);
    if (now.empty()) continue;
    auto rotated = [&] {
      Cycle t = target;
      const std::size_t at = position_of(t, now.front());
      if (at == t.size()) throw Error(ErrorCode::NotSubgraph, "target rotation has other ends");
      std::rotate(t.begin(), t.begin() + static_cast<long>(at), t.end());
      return t;
    }();
    // Bubble sort positions 1..deg-1 into the target's linear order.
    std::map<EdgeEnd, std::size_t> rank;
    for (std::size_t i = 0; i < rotated.size(); ++i) rank[rotated[i]] = i;
    bool moved = true;
    while (moved) {
      moved = false;
      const Cycle& cycle = out.rotation.at(v);
      for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
        if (rank.at(cycle[i]) > rank.at(cycle[i + 1])) {
          out = adjacent_swap(out, v, i);
          moved = true;
          break;
        }
      }
    }
  }
  return out;
}

ParityDrawing random_moves(const ParityDrawing& d, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  ParityDrawing out = d;
  std::vector<std::pair<EdgeId, VertexId>> options;
  for (const auto& [e, ed] : d.graph.edges())
    for (VertexId v : d.graph.vertices())
      if (!ed.touches(v)) options.push_back({e, v});
  if (options.empty()) return out;
  for (std::size_t i = 0; i < k; ++i) {
    auto [e, v] = options[pick(rng, options.size())];
    out = edge_vertex_move(out, e, v);
  }
  return out;
}

}  // namespace uht
