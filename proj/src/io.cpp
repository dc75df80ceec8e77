#include "uht/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace uht {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

int parse_int(const std::string& token, const std::string& where) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) fail(where, "bad integer '" + token + "'");
  return value;
}

Rational parse_coord(const std::string& token, const std::string& where) {
  try {
    return parse_rational(token);
  } catch (const Error&) {
    fail(where, "bad coordinate '" + token + "'");
  }
}

EdgeEnd resolve_end(const Multigraph& g, VertexId v, const std::string& token, const std::string& where) {
  const auto dot = token.find('.');
  const EdgeId e = eid(parse_int(token.substr(0, dot), where));
  if (!g.has_edge(e)) fail(where, "unknown edge " + token.substr(0, dot));
  const Edge& ed = g.edge(e);
  if (!ed.touches(v)) fail(where, "edge " + token + " does not end at this vertex");
  if (dot == std::string::npos) {
    if (ed.is_loop()) fail(where, "loop end needs .a or .b");
    return {e, static_cast<std::uint8_t>(ed.a == v ? 0 : 1)};
  }
  const std::string side = token.substr(dot + 1);
  if (side != "a" && side != "b") fail(where, "bad end side '" + token + "'");
  const EdgeEnd end{e, static_cast<std::uint8_t>(side == "a" ? 0 : 1)};
  if (ed.at(end.side) != v) fail(where, "end " + token + " is not at this vertex");
  return end;
}

}  // namespace

void resolve_rotations(Document& doc) {
  for (const auto& r : doc.unresolved) {
    if (!doc.graph.has_vertex(r.v)) fail(r.where, "rotation for unknown vertex");
    if (doc.rotation.has(r.v)) fail(r.where, "second rotation for vertex");
    Cycle cycle;
    for (const auto& token : r.ends) cycle.push_back(resolve_end(doc.graph, r.v, token, r.where));
    doc.rotation.set(r.v, std::move(cycle));
  }
  doc.unresolved.clear();
}

void parse_into(Document& doc, std::istream& in, const std::string& name) {
  std::vector<std::pair<std::pair<int, int>, std::string>> odd;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    const std::string& kw = tok[0];
    auto need = [&](std::size_t n) {
      if (tok.size() != n) fail(where, "'" + kw + "' expects " + std::to_string(n - 1) + " fields");
    };
    try {
      if (kw == "v") {
        need(2);
        const VertexId v = vid(parse_int(tok[1], where));
        if (doc.graph.has_vertex(v)) fail(where, "duplicate vertex " + tok[1]);
        doc.graph.add_vertex(v);
      } else if (kw == "e") {
        need(4);
        doc.graph.add_edge(eid(parse_int(tok[1], where)), vid(parse_int(tok[2], where)),
                           vid(parse_int(tok[3], where)));
      } else if (kw == "rot") {
        if (tok.size() < 2) fail(where, "'rot' needs a vertex");
        doc.unresolved.push_back({vid(parse_int(tok[1], where)), {tok.begin() + 2, tok.end()}, where});
      } else if (kw == "odd") {
        need(3);
        odd.push_back({{parse_int(tok[1], where), parse_int(tok[2], where)}, where});
      } else if (kw == "coord") {
        need(4);
        const VertexId v = vid(parse_int(tok[1], where));
        if (doc.coords.contains(v)) fail(where, "duplicate coordinate");
        doc.coords[v] = {parse_coord(tok[2], where), parse_coord(tok[3], where)};
      } else if (kw == "poly") {
        if (tok.size() < 2 || tok.size() % 2 != 0) fail(where, "'poly' needs an edge and x y pairs");
        const EdgeId e = eid(parse_int(tok[1], where));
        if (doc.bends.contains(e)) fail(where, "duplicate polyline");
        std::vector<Point> pts;
        for (std::size_t i = 2; i < tok.size(); i += 2)
          pts.push_back({parse_coord(tok[i], where), parse_coord(tok[i + 1], where)});
        doc.bends[e] = std::move(pts);
      } else if (kw == "W" || kw == "preserved") {
        auto& into = kw == "W" ? doc.w : doc.preserved;
        for (std::size_t i = 1; i < tok.size(); ++i) into.insert(vid(parse_int(tok[i], where)));
      } else {
        fail(where, "unknown keyword '" + kw + "'");
      }
    } catch (const Error& err) {
      if (err.code() == ErrorCode::Parse) throw;
      fail(where, err.what());
    }
  }
  for (const auto& [ef, where] : odd) {
    if (ef.first == ef.second) fail(where, "an edge has no parity with itself");
    doc.parity.set(eid(ef.first), eid(ef.second), true);
  }
}

Document parse_files(const std::vector<std::string>& paths) {
  Document doc;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, path + ": cannot open");
    parse_into(doc, in, path);
  }
  resolve_rotations(doc);
  return doc;
}

Document parse_text(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  parse_into(doc, in, "<text>");
  resolve_rotations(doc);
  return doc;
}

GeometricDrawing geometry_of(const Document& doc) {
  GeometricDrawing gd;
  gd.graph = doc.graph;
  for (VertexId v : doc.graph.vertices()) {
    auto it = doc.coords.find(v);
    if (it == doc.coords.end())
      throw Error(ErrorCode::Parse, "vertex " + std::to_string(raw(v)) + " has no coordinate");
    gd.coords[v] = it->second;
  }
  for (const auto& [v, p] : doc.coords)
    if (!doc.graph.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "coordinate for unknown vertex");
  for (const auto& [e, ed] : doc.graph.edges()) {
    std::vector<Point> line{gd.coords[ed.a]};
    if (auto it = doc.bends.find(e); it != doc.bends.end()) line.insert(line.end(), it->second.begin(), it->second.end());
    line.push_back(gd.coords[ed.b]);
    gd.polylines[e] = std::move(line);
  }
  for (const auto& [e, pts] : doc.bends)
    if (!doc.graph.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "polyline for unknown edge");
  return gd;
}

ParityDrawing drawing_of(const Document& doc, const GeometryOptions& options) {
  for (const auto& [e, f] : doc.parity.odd_pairs())
    if (!doc.graph.has_edge(e) || !doc.graph.has_edge(f))
      throw Error(ErrorCode::UnknownEdge, "odd pair names an unknown edge");
  if (doc.has_geometry()) return to_parity_drawing(geometry_of(doc), options);
  ParityDrawing d;
  d.graph = doc.graph;
  d.rotation = doc.rotation;
  for (VertexId v : doc.graph.vertices())
    if (!d.rotation.has(v) && doc.graph.degree(v) <= 1) d.rotation.set(v, doc.graph.ends_at(v));
  d.parity = doc.parity;
  check_drawing(d);
  return d;
}

std::set<VertexId> parse_id_list(const std::string& text) {
  std::set<VertexId> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    for (std::string t; words >> t;) out.insert(vid(parse_int(t, "id list")));
  }
  return out;
}

std::string format_end(const Multigraph& g, EdgeEnd end) {
  std::string out = std::to_string(raw(end.edge));
  if (g.edge(end.edge).is_loop()) out += end.side == 0 ? ".a" : ".b";
  return out;
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream os;
  for (VertexId v : g.vertices()) os << "v " << v << '\n';
  for (const auto& [e, ed] : g.edges()) os << "e " << e << ' ' << ed.a << ' ' << ed.b << '\n';
  return os.str();
}

std::string format_rotation(const Multigraph& g, const RotationSystem& r) {
  std::ostringstream os;
  for (const auto& [v, cycle] : r.cycles()) {
    os << "rot " << v;
    for (const EdgeEnd& end : cycle) os << ' ' << format_end(g, end);
    os << '\n';
  }
  return os.str();
}

std::string format_parity(const ParityVector& p) {
  std::ostringstream os;
  for (const auto& [e, f] : p.odd_pairs()) os << "odd " << e << ' ' << f << '\n';
  return os.str();
}

std::string format_w(const std::set<VertexId>& w, const std::string& keyword) {
  std::ostringstream os;
  os << keyword;
  for (VertexId v : w) os << ' ' << v;
  os << '\n';
  return os.str();
}

std::string format_geometry(const GeometricDrawing& gd) {
  std::ostringstream os;
  os << format_graph(gd.graph);
  for (const auto& [v, p] : gd.coords)
    os << "coord " << v << ' ' << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
  for (const auto& [e, line] : gd.polylines) {
    if (line.size() <= 2) continue;
    os << "poly " << e;
    for (std::size_t i = 1; i + 1 < line.size(); ++i)
      os << ' ' << format_rational(line[i].x) << ' ' << format_rational(line[i].y);
    os << '\n';
  }
  return os.str();
}

}  // namespace uht
