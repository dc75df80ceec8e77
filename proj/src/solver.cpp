#include "uht/solver.hpp"

#include <sstream>

namespace uht {

UnifiedSystem build_system(const ParityDrawing& d, const std::set<VertexId>& w) {
  const Multigraph& g = d.graph;
  if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "reduce multigraphs before solving");

  const std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, std::size_t> vindex;
  for (std::size_t j = 0; j < vs.size(); ++j) vindex[vs[j]] = j;
  std::vector<EdgeId> es;
  for (const auto& [e, ed] : g.edges()) es.push_back(e);
  std::map<EdgeId, std::size_t> eindex;
  for (std::size_t i = 0; i < es.size(); ++i) eindex[es[i]] = i;

  UnifiedSystem s;
  std::vector<long> column(es.size() * vs.size(), -1);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Edge& ed = g.edge(es[i]);
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (ed.touches(vs[j]) && !w.contains(vs[j])) continue;
      column[i * vs.size() + j] = static_cast<long>(s.variables.size());
      s.variables.push_back({es[i], vs[j]});
    }
  }
  auto var = [&](EdgeId e, VertexId v) {
    return static_cast<std::size_t>(column[eindex[e] * vs.size() + vindex[v]]);
  };

  for (std::size_t i = 0; i < es.size(); ++i) {
    const Edge& x = g.edge(es[i]);
    for (std::size_t k = i + 1; k < es.size(); ++k) {
      const Edge& y = g.edge(es[k]);
      if (!g.adjacent(es[i], es[k])) {
        s.pairs.push_back({es[i], es[k], std::nullopt});
      } else {
        const VertexId shared = y.touches(x.a) ? x.a : x.b;
        if (w.contains(shared)) s.pairs.push_back({es[i], es[k], shared});
      }
    }
  }

  s.matrix = GF2Matrix(s.pairs.size(), s.variables.size());
  s.rhs.resize(s.pairs.size());
  for (std::size_t r = 0; r < s.pairs.size(); ++r) {
    const auto& p = s.pairs[r];
    const Edge& x = g.edge(p.e);
    const Edge& y = g.edge(p.f);
    if (!p.shared) {
      s.matrix.flip(r, var(p.e, y.a));
      s.matrix.flip(r, var(p.e, y.b));
      s.matrix.flip(r, var(p.f, x.a));
      s.matrix.flip(r, var(p.f, x.b));
    } else {
      s.matrix.flip(r, var(p.e, y.other(*p.shared)));
      s.matrix.flip(r, var(p.f, x.other(*p.shared)));
      s.matrix.flip(r, var(p.e, *p.shared));
      s.matrix.flip(r, var(p.f, *p.shared));
    }
    s.rhs[r] = d.parity.get(p.e, p.f) ? 1 : 0;
  }
  return s;
}

GF2Solution gf2_solve(const UnifiedSystem& system) { return gf2_solve(system.matrix, system.rhs); }

ParityDrawing apply_moves(const ParityDrawing& d, const std::vector<MoveVariable>& moves) {
  ParityDrawing out = d;
  for (const auto& m : moves)
    out = d.graph.edge(m.edge).touches(m.vertex) ? wind_around_endpoint(out, m.edge, m.vertex)
                                                 : edge_vertex_move(out, m.edge, m.vertex);
  return out;
}

Verdict decide_unified(const ParityDrawing& d, const std::set<VertexId>& w) {
  UnifiedSystem system = build_system(d, w);
  GF2Solution sol = gf2_solve(system);
  Verdict v;
  v.feasible = sol.feasible;
  v.variables = system.variables.size();
  v.rows = system.pairs.size();
  if (!sol.feasible) {
    v.certificate = std::move(sol.certificate);
    return v;
  }
  for (std::size_t c = 0; c < sol.assignment.size(); ++c)
    if (sol.assignment[c]) v.moves.push_back(system.variables[c]);
  // Witness check: every constrained pair is even after the moves.
  const ParityDrawing moved = apply_moves(d, v.moves);
  for (const auto& p : system.pairs) {
    if (moved.parity.get(p.e, p.f)) {
      std::ostringstream os;
      os << "witness leaves pair (" << p.e << ", " << p.f << ") odd";
      throw Error(ErrorCode::Internal, os.str());
    }
  }
  return v;
}

Verdict decide_strong(const ParityDrawing& d) { return decide_unified(d, {}); }

Verdict decide_weak(const ParityDrawing& d) {
  Verdict v = decide_unified(d, d.graph.vertices());
  const bool planar = is_planar_rotation(d.rotation);
  if (v.feasible != planar) {
    v.inconsistent_input = true;
    v.feasible = false;
    v.moves.clear();
  }
  return v;
}

}  // namespace uht
