#include <doctest.h>

#include "support.hpp"
#include "uht/export.hpp"
#include "uht/generator.hpp"
#include "uht/io.hpp"

using namespace uht;
using uht::test::make_graph;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    Document doc = parse_text(text);
    drawing_of(doc);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("drawings round-trip through text") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PlanarInstance p = random_planar_multigraph(6, 8, 2, 2, seed);
    ParityDrawing d = scramble(embedding_drawing(p.graph, p.rotation), {vid(0)}, 10, seed);
    d.parity.set(eid(0), eid(1), !d.parity.get(eid(0), eid(1)));
    const std::string text = format_graph(d.graph) + format_rotation(d.graph, d.rotation) +
                             format_parity(d.parity) + format_w({vid(0), vid(4)});
    Document doc = parse_text(text);
    CHECK(drawing_of(doc) == d);
    CHECK(doc.w == std::set{vid(0), vid(4)});
  }
}

TEST_CASE("loop ends are written with sides") {
  Multigraph g = make_graph(1, {{0, 0}});
  RotationSystem r;
  r.set(vid(0), {{eid(0), 1}, {eid(0), 0}});
  const std::string text = format_rotation(g, r);
  CHECK(text == "rot 0 0.b 0.a\n");
  Document doc = parse_text(format_graph(g) + text);
  CHECK(doc.rotation.at(vid(0)) == r.at(vid(0)));
}

TEST_CASE("comments, blank lines and any order after the edges") {
  Document doc = parse_text(
      "# triangle\n"
      "v 0\nv 1\nv 2\n\n"
      "e 0 0 1\ne 1 1 2   # second\ne 2 2 0\n"
      "W 1\n"
      "rot 2 1 2\nrot 0 0 2\nrot 1 0 1\n");
  ParityDrawing d = drawing_of(doc);
  CHECK(genus(d.rotation) == 0);
  CHECK(doc.w == std::set{vid(1)});
}

TEST_CASE("vertices of degree at most one may omit their rotation") {
  Document doc = parse_text("v 0\nv 1\nv 2\ne 0 0 1\n");
  ParityDrawing d = drawing_of(doc);
  CHECK(d.rotation.at(vid(0)).size() == 1);
  CHECK(d.rotation.at(vid(2)).empty());
}

TEST_CASE("malformed input is rejected") {
  CHECK(code_of("v x\n") == ErrorCode::Parse);
  CHECK(code_of("v 0\nv 0\n") == ErrorCode::Parse);
  CHECK(code_of("v 0\ne 0 0 1\n") == ErrorCode::Parse);
  CHECK(code_of("v 0\nv 1\ne 0 0 1\nrot 0 0 0\n") != ErrorCode::Internal);
  CHECK(code_of("v 0\ne 0 0 0\nrot 0 0 0\n") == ErrorCode::Parse);
  CHECK(code_of("v 0\nv 1\ne 0 0 1\nrot 7 0\n") == ErrorCode::Parse);
  CHECK(code_of("v 0\nv 1\ne 0 0 1\nodd 0 0\n") == ErrorCode::Parse);
  CHECK(code_of("v 0\nv 1\ne 0 0 1\nodd 0 5\n") == ErrorCode::UnknownEdge);
  CHECK(code_of("frob 1\n") == ErrorCode::Parse);
  CHECK(code_of("v 0\ncoord 0 1 zz\n") == ErrorCode::Parse);
}

TEST_CASE("error messages carry the line") {
  try {
    parse_text("v 0\nv 1\n\ne 0 0 9\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(":4") != std::string::npos);
  }
}

TEST_CASE("geometry round-trips exactly") {
  Multigraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
  GeometricDrawing gd = random_polyline_drawing(g, 5, 2);
  Document doc = parse_text(format_geometry(gd));
  GeometricDrawing back = geometry_of(doc);
  CHECK(back.coords == gd.coords);
  CHECK(back.polylines == gd.polylines);
  CHECK(drawing_of(doc) == to_parity_drawing(gd));
}

TEST_CASE("rational coordinates") {
  Document doc = parse_text("v 0\nv 1\ne 0 0 1\ncoord 0 1/3 -2.5\ncoord 1 1e2 0\n");
  CHECK(doc.coords.at(vid(0)).x == Rational(1, 3));
  CHECK(doc.coords.at(vid(0)).y == Rational(-5, 2));
  CHECK(doc.coords.at(vid(1)).x == Rational(100));
}

TEST_CASE("id lists") {
  CHECK(parse_id_list("") == std::set<VertexId>{});
  CHECK(parse_id_list("3,1,2") == std::set{vid(1), vid(2), vid(3)});
  CHECK_THROWS_AS(parse_id_list("1,,x"), Error);
}

TEST_CASE("SVG and DOT export") {
  PlanarInstance p = wheel(6);
  const std::string svg = export_svg(p.graph, p.rotation);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  const std::string dot = export_dot(p.graph, p.rotation);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  auto layout = tutte_layout(p.graph, p.rotation);
  CHECK(layout.size() == 6);
  // The hub is not on the pinned outer face, so it sits at its neighbors' mean.
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (int v = 1; v < 6; ++v) mean += layout.at(vid(v));
  CHECK((layout.at(vid(0)) - mean / 5).norm() < 1e-9);
}
