#include "uht/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace uht {

namespace mp = boost::multiprecision;

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw Error(ErrorCode::Parse, "bad number '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational p = parse_rational(text.substr(0, slash));
    Rational q = parse_rational(text.substr(slash + 1));
    if (q == 0) fail();
    return p / q;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --scale;
      any = true;
    }
  }
  if (!any) fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    long exponent = 0;
    bool exp_any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exponent = exponent * 10 + (text[i++] - '0');
      exp_any = true;
      if (exponent > 4000) fail();
    }
    if (!exp_any) fail();
    scale += exp_negative ? -exponent : exponent;
  }
  if (i != text.size()) fail();
  mp::cpp_int value(digits);
  mp::cpp_int power = mp::pow(mp::cpp_int(10), static_cast<unsigned>(std::abs(scale)));
  Rational out = scale >= 0 ? Rational(value * power) : Rational(value, power);
  return negative ? Rational(-out) : out;
}

std::string format_rational(const Rational& value) {
  std::ostringstream os;
  os << mp::numerator(value);
  if (mp::denominator(value) != 1) os << '/' << mp::denominator(value);
  return os.str();
}

GeometricDrawing straight_line_drawing(const Multigraph& g,
                                       const std::map<VertexId, Point>& coords) {
  GeometricDrawing gd{g, coords, {}};
  for (const auto& [e, ed] : g.edges()) gd.polylines[e] = {coords.at(ed.a), coords.at(ed.b)};
  return gd;
}

std::string Violation::describe() const {
  static const char* names[] = {"malformed polyline", "coincident vertices", "edge through vertex",
                                "vertex too close to edge", "edges touch", "collinear overlap",
                                "self-intersecting edge", "three edges cross at one point"};
  std::ostringstream os;
  os << names[static_cast<int>(kind)];
  if (!edges.empty()) {
    os << " edges";
    for (EdgeId e : edges) os << ' ' << e;
  }
  if (vertex) os << " vertex " << *vertex;
  os << " at (" << x << ", " << y << ")";
  return os.str();
}

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int orient(const Point& a, const Point& b, const Point& c) {
  return sign_of((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

struct Hit {
  enum class Kind { None, Proper, Touch, Overlap } kind = Kind::None;
  Point at;
};

Hit intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 == 0 && o2 == 0) {
    // Collinear: project onto the dominant axis.
    const bool use_x = p1.x != p2.x;
    auto coord = [use_x](const Point& p) -> const Rational& { return use_x ? p.x : p.y; };
    Rational lo = std::max(std::min(coord(p1), coord(p2)), std::min(coord(q1), coord(q2)));
    Rational hi = std::min(std::max(coord(p1), coord(p2)), std::max(coord(q1), coord(q2)));
    if (lo > hi) return {};
    if (lo < hi) return {Hit::Kind::Overlap, p1};
    for (const Point* p : {&p1, &p2})
      if (coord(*p) == lo) return {Hit::Kind::Touch, *p};
    return {};
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    Rational denom = (p2.x - p1.x) * (q2.y - q1.y) - (p2.y - p1.y) * (q2.x - q1.x);
    Rational t = ((q1.x - p1.x) * (q2.y - q1.y) - (q1.y - p1.y) * (q2.x - q1.x)) / denom;
    return {Hit::Kind::Proper, {p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)}};
  }
  if (o1 == 0 && on_segment(p1, p2, q1)) return {Hit::Kind::Touch, q1};
  if (o2 == 0 && on_segment(p1, p2, q2)) return {Hit::Kind::Touch, q2};
  if (o3 == 0 && on_segment(q1, q2, p1)) return {Hit::Kind::Touch, p1};
  if (o4 == 0 && on_segment(q1, q2, p2)) return {Hit::Kind::Touch, p2};
  return {};
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double distance_to_segment(const Point& a, const Point& b, const Point& p) {
  const double ax = to_double(a.x), ay = to_double(a.y);
  const double bx = to_double(b.x), by = to_double(b.y);
  const double px = to_double(p.x), py = to_double(p.y);
  const double dx = bx - ax, dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px - (ax + t * dx), py - (ay + t * dy));
}

Violation make_violation(Violation::Kind kind, std::vector<EdgeId> edges, const Point& at,
                         std::optional<VertexId> vertex = std::nullopt) {
  return {kind, std::move(edges), vertex, to_double(at.x), to_double(at.y)};
}

}  // namespace

std::vector<Violation> validate_general_position(const GeometricDrawing& gd,
                                                 const GeometryOptions& options) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  const Multigraph& g = gd.graph;

  std::map<Point, VertexId> by_point;
  for (VertexId v : g.vertices()) {
    auto it = gd.coords.find(v);
    if (it == gd.coords.end()) {
      out.push_back({Kind::MalformedPolyline, {}, v, 0, 0});
      continue;
    }
    auto [slot, fresh] = by_point.emplace(it->second, v);
    if (!fresh) out.push_back(make_violation(Kind::CoincidentVertices, {}, it->second, v));
  }
  bool malformed = false;
  for (const auto& [e, ed] : g.edges()) {
    auto it = gd.polylines.find(e);
    bool bad = it == gd.polylines.end() || it->second.size() < 2 || !gd.coords.contains(ed.a) ||
               !gd.coords.contains(ed.b) || it->second.front() != gd.coords.at(ed.a) ||
               it->second.back() != gd.coords.at(ed.b);
    if (!bad)
      for (std::size_t k = 0; k + 1 < it->second.size(); ++k)
        if (it->second[k] == it->second[k + 1]) bad = true;
    if (bad) {
      out.push_back({Kind::MalformedPolyline, {e}, std::nullopt, 0, 0});
      malformed = true;
    }
  }
  if (malformed || !out.empty()) return out;

  // Vertices lying on, or too close to, edges that do not legitimately end there.
  for (const auto& [e, ed] : g.edges()) {
    const auto& poly = gd.polylines.at(e);
    const std::size_t last = poly.size() - 2;
    for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
      for (const auto& [x, c] : gd.coords) {
        const bool own_start = k == 0 && x == ed.a;
        const bool own_end = k == last && x == ed.b;
        if (on_segment(poly[k], poly[k + 1], c)) {
          if ((own_start && c == poly[k]) || (own_end && c == poly[k + 1])) continue;
          out.push_back(make_violation(Kind::EdgeThroughVertex, {e}, c, x));
        } else if (options.epsilon > 0 && !own_start && !own_end &&
                   distance_to_segment(poly[k], poly[k + 1], c) < options.epsilon) {
          out.push_back(make_violation(Kind::VertexTooClose, {e}, c, x));
        }
      }
    }
  }

  // Self-intersections.
  for (const auto& [e, ed] : g.edges()) {
    const auto& poly = gd.polylines.at(e);
    const std::size_t segs = poly.size() - 1;
    for (std::size_t i = 0; i < segs; ++i) {
      for (std::size_t j = i + 1; j < segs; ++j) {
        Hit hit = intersect(poly[i], poly[i + 1], poly[j], poly[j + 1]);
        if (hit.kind == Hit::Kind::None) continue;
        const bool consecutive = j == i + 1;
        const bool closing = ed.is_loop() && i == 0 && j == segs - 1 && segs > 2;
        if (hit.kind != Hit::Kind::Overlap && (consecutive || closing)) {
          const Point& shared = consecutive ? poly[j] : poly[0];
          if (hit.at == shared) continue;
        }
        out.push_back(make_violation(hit.kind == Hit::Kind::Overlap ? Kind::Overlap
                                                                    : Kind::SelfIntersection,
                                     {e}, hit.at));
      }
    }
  }

  // Pairwise contacts between distinct edges.
  std::map<Point, std::set<EdgeId>> crossings;
  for (auto it = g.edges().begin(); it != g.edges().end(); ++it) {
    for (auto jt = std::next(it); jt != g.edges().end(); ++jt) {
      const EdgeId e = it->first, f = jt->first;
      const auto& pe = gd.polylines.at(e);
      const auto& pf = gd.polylines.at(f);
      for (std::size_t i = 0; i + 1 < pe.size(); ++i) {
        for (std::size_t j = 0; j + 1 < pf.size(); ++j) {
          Hit hit = intersect(pe[i], pe[i + 1], pf[j], pf[j + 1]);
          switch (hit.kind) {
            case Hit::Kind::None: break;
            case Hit::Kind::Proper: crossings[hit.at].insert({e, f}); break;
            case Hit::Kind::Overlap:
              out.push_back(make_violation(Kind::Overlap, {e, f}, hit.at));
              break;
            case Hit::Kind::Touch: {
              auto v = by_point.find(hit.at);
              const bool shared_end = v != by_point.end() && it->second.touches(v->second) &&
                                      jt->second.touches(v->second);
              if (!shared_end) out.push_back(make_violation(Kind::Touching, {e, f}, hit.at));
              break;
            }
          }
        }
      }
    }
  }
  for (const auto& [at, edges] : crossings)
    if (edges.size() >= 3)
      out.push_back(make_violation(Kind::TripleCrossing, {edges.begin(), edges.end()}, at));
  return out;
}

bool crossing_parity(const GeometricDrawing& gd, EdgeId e, EdgeId f) {
  const auto& pe = gd.polylines.at(e);
  const auto& pf = gd.polylines.at(f);
  bool odd = false;
  for (std::size_t i = 0; i + 1 < pe.size(); ++i)
    for (std::size_t j = 0; j + 1 < pf.size(); ++j)
      if (intersect(pe[i], pe[i + 1], pf[j], pf[j + 1]).kind == Hit::Kind::Proper) odd = !odd;
  return odd;
}

Cycle rotation_at(const GeometricDrawing& gd, VertexId v) {
  struct Dir {
    EdgeEnd end;
    Rational x;
    Rational y;
  };
  std::vector<Dir> dirs;
  for (const EdgeEnd& end : gd.graph.ends_at(v)) {
    const auto& poly = gd.polylines.at(end.edge);
    const Point& from = end.side == 0 ? poly[0] : poly[poly.size() - 1];
    const Point& to = end.side == 0 ? poly[1] : poly[poly.size() - 2];
    // Mirror y so that clockwise becomes the usual counterclockwise sweep.
    dirs.push_back({end, to.x - from.x, from.y - to.y});
  }
  auto half = [](const Dir& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
  std::sort(dirs.begin(), dirs.end(), [&](const Dir& p, const Dir& q) {
    if (half(p) != half(q)) return half(p) < half(q);
    return p.x * q.y - p.y * q.x > 0;
  });
  Cycle out;
  for (const Dir& d : dirs) out.push_back(d.end);
  return out;
}

ParityDrawing to_parity_drawing(const GeometricDrawing& gd, const GeometryOptions& options) {
  auto violations = validate_general_position(gd, options);
  if (!violations.empty()) {
    std::ostringstream os;
    os << violations.size() << " violation(s)";
    for (const auto& v : violations) os << "\n  " << v.describe();
    throw Error(ErrorCode::GeneralPosition, os.str());
  }
  ParityDrawing d;
  d.graph = gd.graph;
  for (VertexId v : gd.graph.vertices()) d.rotation.set(v, rotation_at(gd, v));
  const auto& edges = gd.graph.edges();
  for (auto it = edges.begin(); it != edges.end(); ++it)
    for (auto jt = std::next(it); jt != edges.end(); ++jt)
      if (crossing_parity(gd, it->first, jt->first)) d.parity.set(it->first, jt->first, true);
  return d;
}

GeometricDrawing jitter(const GeometricDrawing& gd, std::uint64_t seed, const Rational& magnitude) {
  constexpr long kSteps = 1 << 20;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> step(-kSteps, kSteps);
  auto offset = [&] { return magnitude * Rational(step(rng), kSteps); };
  GeometricDrawing out = gd;
  for (auto& [v, p] : out.coords) p = {p.x + offset(), p.y + offset()};
  for (auto& [e, poly] : out.polylines) {
    const Edge& ed = out.graph.edge(e);
    for (std::size_t k = 1; k + 1 < poly.size(); ++k) poly[k] = {poly[k].x + offset(), poly[k].y + offset()};
    poly.front() = out.coords.at(ed.a);
    poly.back() = out.coords.at(ed.b);
  }
  return out;
}

}  // namespace uht
