#include "uht/export.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace uht {

namespace {

std::vector<VertexId> longest_face_vertices(const Multigraph& g, const RotationSystem& r,
                                            const std::set<VertexId>& comp) {
  const FaceSet fs = faces(r.restricted(g.induced(comp)));
  const std::vector<EdgeEnd>* best = nullptr;
  for (const auto& face : fs.faces)
    if (!best || face.size() > best->size()) best = &face;
  std::vector<VertexId> out;
  if (!best) return out;
  for (const EdgeEnd& dart : *best) {
    const VertexId v = g.edge(dart.edge).at(dart.side);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

std::map<VertexId, Eigen::Vector2d> tutte_layout(const Multigraph& g, const RotationSystem& r) {
  std::map<VertexId, Eigen::Vector2d> pos;
  double offset = 0;
  for (const auto& members : connected_components(g)) {
    const std::set<VertexId> comp(members.begin(), members.end());
    const double radius = std::max(1.0, std::sqrt(static_cast<double>(comp.size())));
    const Eigen::Vector2d centre(offset + radius, 0);
    offset += 2 * radius + 1;
    if (comp.size() == 1) {
      pos[*comp.begin()] = centre;
      continue;
    }
    const auto outer = longest_face_vertices(g, r, comp);
    std::map<VertexId, int> inner;
    for (VertexId v : comp)
      if (std::find(outer.begin(), outer.end(), v) == outer.end()) inner.emplace(v, static_cast<int>(inner.size()));
    for (std::size_t i = 0; i < outer.size(); ++i) {
      // Faces run clockwise around their interior; the outer face's boundary
      // is therefore laid counterclockwise on the page.
      const double t = 2 * M_PI * static_cast<double>(i) / static_cast<double>(outer.size());
      pos[outer[i]] = centre + radius * Eigen::Vector2d(std::cos(t), -std::sin(t));
    }
    if (inner.empty()) continue;

    const int n = static_cast<int>(inner.size());
    std::vector<Eigen::Triplet<double>> terms;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, 2);
    for (const auto& [v, row] : inner) {
      double deg = 0;
      for (EdgeId e : g.incident(v)) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        const VertexId u = ed.other(v);
        deg += 1;
        if (auto it = inner.find(u); it != inner.end()) terms.emplace_back(row, it->second, -1.0);
        else rhs.row(row) += pos[u].transpose();
      }
      terms.emplace_back(row, row, deg);
    }
    Eigen::SparseMatrix<double> lap(n, n);
    lap.setFromTriplets(terms.begin(), terms.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(lap);
    if (lu.info() != Eigen::Success) throw Error(ErrorCode::Internal, "singular barycentric system");
    const Eigen::MatrixXd xy = lu.solve(rhs);
    for (const auto& [v, row] : inner) pos[v] = xy.row(row).transpose();
  }
  return pos;
}

std::string export_svg(const Multigraph& g, const RotationSystem& r) {
  const auto pos = tutte_layout(g, r);
  constexpr double scale = 60, margin = 30;
  Eigen::Vector2d lo(0, 0), hi(0, 0);
  if (!pos.empty()) {
    lo = hi = pos.begin()->second;
    for (const auto& [v, p] : pos) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
  }
  auto px = [&](const Eigen::Vector2d& p) -> Eigen::Vector2d { return (p - lo) * scale + Eigen::Vector2d(margin, margin); };
  const Eigen::Vector2d size = (hi - lo) * scale + Eigen::Vector2d(2 * margin, 2 * margin);

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size.x() << "\" height=\"" << size.y()
     << "\">\n<g stroke=\"black\" fill=\"none\">\n";
  std::map<std::pair<VertexId, VertexId>, int> seen;
  for (const auto& [e, ed] : g.edges()) {
    const Eigen::Vector2d a = px(pos.at(ed.a));
    if (ed.is_loop()) {
      const int k = seen[{ed.a, ed.a}]++;
      os << "<circle id=\"e" << e << "\" cx=\"" << a.x() << "\" cy=\"" << a.y() - 10 - 6 * k << "\" r=\""
         << 10 + 6 * k << "\"/>\n";
      continue;
    }
    const Eigen::Vector2d b = px(pos.at(ed.b));
    const int k = seen[std::minmax(ed.a, ed.b)]++;
    if (k == 0) {
      os << "<line id=\"e" << e << "\" x1=\"" << a.x() << "\" y1=\"" << a.y() << "\" x2=\"" << b.x()
         << "\" y2=\"" << b.y() << "\"/>\n";
    } else {
      // Parallel copies bow out alternately on either side.
      const Eigen::Vector2d d = b - a;
      const Eigen::Vector2d normal = Eigen::Vector2d(-d.y(), d.x()).normalized();
      const double bow = 12.0 * ((k + 1) / 2) * (k % 2 ? 1 : -1);
      const Eigen::Vector2d c = (a + b) / 2 + bow * normal;
      os << "<path id=\"e" << e << "\" d=\"M " << a.x() << ' ' << a.y() << " Q " << c.x() << ' ' << c.y()
         << ' ' << b.x() << ' ' << b.y() << "\"/>\n";
    }
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (const auto& [v, p] : pos) {
    const Eigen::Vector2d q = px(p);
    os << "<circle cx=\"" << q.x() << "\" cy=\"" << q.y() << "\" r=\"8\" fill=\"white\" stroke=\"black\"/>\n"
       << "<text x=\"" << q.x() << "\" y=\"" << q.y() + 3.5 << "\">" << v << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string export_dot(const Multigraph& g, const RotationSystem& r) {
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v : g.vertices()) {
    os << "  " << v << " [label=\"" << v << "\"";
    if (r.has(v) && !r.at(v).empty()) {
      os << ", rotation=\"";
      for (std::size_t i = 0; i < r.at(v).size(); ++i) os << (i ? " " : "") << r.at(v)[i];
      os << "\"";
    }
    os << "];\n";
  }
  auto slot = [&](VertexId v, EdgeEnd end) {
    return r.has(v) ? static_cast<long>(position_of(r.at(v), end)) : -1L;
  };
  for (const auto& [e, ed] : g.edges())
    os << "  " << ed.a << " -- " << ed.b << " [id=\"e" << e << "\", taillabel=\"" << slot(ed.a, {e, 0})
       << "\", headlabel=\"" << slot(ed.b, {e, 1}) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace uht
