#include <doctest.h>

#include <random>

#include "support.hpp"
#include "uht/generator.hpp"
#include "uht/geometry.hpp"

using namespace uht;
using uht::test::make_graph;

namespace {

GeometricDrawing straight(const Multigraph& g, std::initializer_list<std::pair<int, int>> pts) {
  std::map<VertexId, Point> coords;
  int v = 0;
  for (auto [x, y] : pts) coords[vid(v++)] = {x, y};
  return straight_line_drawing(g, coords);
}

bool has(const std::vector<Violation>& vs, Violation::Kind kind) {
  for (const auto& v : vs)
    if (v.kind == kind) return true;
  return false;
}

// Counts proper crossings of two polylines in doubles; inputs are small
// integers in general position, so the signs are exact.
int recount(const std::vector<Point>& p, const std::vector<Point>& q) {
  auto d = [](const Rational& r) { return static_cast<double>(r); };
  auto orient = [&](const Point& a, const Point& b, const Point& c) {
    const double v = (d(b.x) - d(a.x)) * (d(c.y) - d(a.y)) - (d(b.y) - d(a.y)) * (d(c.x) - d(a.x));
    return (v > 0) - (v < 0);
  };
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
      const int o1 = orient(p[i], p[i + 1], q[j]), o2 = orient(p[i], p[i + 1], q[j + 1]);
      const int o3 = orient(q[j], q[j + 1], p[i]), o4 = orient(q[j], q[j + 1], p[i + 1]);
      if (o1 * o2 < 0 && o3 * o4 < 0) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-12") == Rational(-12));
  CHECK(parse_rational("3.25") == Rational(13, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2/6") == Rational(1, 3));
  CHECK(parse_rational("-0.5e1") == Rational(-5));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(parse_rational(format_rational(Rational(-7, 3))) == Rational(-7, 3));
}

TEST_CASE("general position") {
  auto x = make_graph(4, {{0, 2}, {1, 3}});
  CHECK(validate_general_position(straight(x, {{0, 0}, {2, 0}, {2, 2}, {0, 2}})).empty());

  auto through = make_graph(3, {{0, 1}});
  auto bad = validate_general_position(straight(through, {{0, 0}, {2, 0}, {1, 0}}));
  CHECK(has(bad, Violation::Kind::EdgeThroughVertex));

  auto overlap = make_graph(4, {{0, 1}, {2, 3}});
  auto o = validate_general_position(straight(overlap, {{0, 0}, {3, 0}, {1, 0}, {4, 0}}));
  CHECK((has(o, Violation::Kind::Overlap) || has(o, Violation::Kind::Touching)));

  auto touch = make_graph(4, {{0, 1}, {2, 3}});
  CHECK(has(validate_general_position(straight(touch, {{0, 0}, {2, 0}, {1, 0}, {1, 2}})),
            Violation::Kind::EdgeThroughVertex));

  auto triple = make_graph(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(has(validate_general_position(straight(triple, {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, 1}})),
            Violation::Kind::TripleCrossing));

  auto near = make_graph(3, {{0, 1}});
  GeometricDrawing n = straight(near, {{0, 0}, {2, 0}, {1, 0}});
  n.coords[vid(2)] = {Rational(1), Rational(1, 100000000000LL)};
  CHECK(has(validate_general_position(n), Violation::Kind::VertexTooClose));
  CHECK(validate_general_position(n, {0.0}).empty());

  auto same = make_graph(2, {});
  CHECK(has(validate_general_position(straight(same, {{1, 1}, {1, 1}})), Violation::Kind::CoincidentVertices));

  auto self = make_graph(2, {{0, 1}});
  GeometricDrawing s = straight(self, {{0, 0}, {4, 0}});
  s.polylines[eid(0)] = {{0, 0}, {2, 2}, {2, -2}, {1, 1}, {4, 0}};
  CHECK(has(validate_general_position(s), Violation::Kind::SelfIntersection));
  CHECK_THROWS_AS(to_parity_drawing(s), Error);
}

TEST_CASE("crossing parity") {
  auto x = make_graph(4, {{0, 2}, {1, 3}});
  GeometricDrawing gd = straight(x, {{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(crossing_parity(gd, eid(0), eid(1)));

  auto apart = make_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(crossing_parity(straight(apart, {{0, 0}, {1, 0}, {0, 5}, {1, 5}}), eid(0), eid(1)));

  GeometricDrawing s = straight(apart, {{0, 0}, {10, 0}, {1, -5}, {9, -5}});
  s.polylines[eid(1)] = {{1, -5}, {3, 5}, {6, 4}, {9, -5}};
  CHECK_FALSE(crossing_parity(s, eid(0), eid(1)));
}

TEST_CASE("rotations from angles") {
  auto star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  // Edges toward E, N, W, S.
  GeometricDrawing gd = straight(star, {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  Cycle c = rotation_at(gd, vid(0));
  CHECK(c == Cycle{{eid(0), 0}, {eid(3), 0}, {eid(2), 0}, {eid(1), 0}});
  CHECK(rotation_at(gd, vid(1)).size() == 1);

  auto k4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
  GeometricDrawing sq = straight(k4, {{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  Cycle at0 = rotation_at(sq, vid(0));
  REQUIRE(at0.size() == 3);
  std::size_t diag = position_of(at0, {eid(4), 0});
  REQUIRE(diag < 3);
  // The diagonal sits between the two hull edges.
  const EdgeId before = at0[(diag + 2) % 3].edge, after = at0[(diag + 1) % 3].edge;
  CHECK(std::set<EdgeId>{before, after} == std::set<EdgeId>{eid(0), eid(3)});
}

TEST_CASE("parity drawings from geometry") {
  auto k4 = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
  ParityDrawing plane = to_parity_drawing(straight(k4, {{0, 0}, {6, 0}, {3, 6}, {3, 2}}));
  CHECK(plane.parity.odd_count() == 0);
  CHECK(genus(plane.rotation) == 0);

  auto convex = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
  ParityDrawing sq = to_parity_drawing(straight(convex, {{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK(sq.parity.odd_count() == 1);
  CHECK(sq.parity.get(eid(4), eid(5)));
}

TEST_CASE("parities agree with an independent recount") {
  Multigraph k5 = complete_graph(5);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GeometricDrawing gd = random_polyline_drawing(k5, seed, 2, 50);
    ParityDrawing d = to_parity_drawing(gd);
    for (const auto& [e, ed] : k5.edges())
      for (const auto& [f, fd] : k5.edges())
        if (e < f) CHECK(d.parity.get(e, f) == (recount(gd.polylines.at(e), gd.polylines.at(f)) % 2 == 1));
  }
}

TEST_CASE("rigid motions and reflection") {
  Multigraph k33 = complete_bipartite(3, 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GeometricDrawing gd = random_polyline_drawing(k33, seed, 1, 100);
    ParityDrawing d = to_parity_drawing(gd);
    auto map = [&](auto f) {
      GeometricDrawing out = gd;
      for (auto& [v, p] : out.coords) p = f(p);
      for (auto& [e, line] : out.polylines)
        for (Point& p : line) p = f(p);
      return to_parity_drawing(out);
    };
    ParityDrawing moved = map([](Point p) { return Point{-p.y + 7, p.x - Rational(1, 3)}; });
    CHECK(moved.parity == d.parity);
    for (VertexId v : k33.vertices()) CHECK(same_cyclic_order(moved.rotation.at(v), d.rotation.at(v)));
    ParityDrawing mirrored = map([](Point p) { return Point{-p.x, p.y}; });
    CHECK(mirrored.parity == d.parity);
    for (VertexId v : k33.vertices()) CHECK(same_cyclic_order(mirrored.rotation.at(v), d.rotation.reflected().at(v)));
  }
}

TEST_CASE("jitter keeps the combinatorics of a generic drawing") {
  Multigraph k5 = complete_graph(5);
  GeometricDrawing gd = random_straight_line_drawing(k5, 4, 1000);
  GeometricDrawing j = jitter(gd, 8, Rational(1, 1000));
  CHECK(j.coords != gd.coords);
  ParityDrawing a = to_parity_drawing(gd), b = to_parity_drawing(j);
  CHECK(a.parity == b.parity);
}
