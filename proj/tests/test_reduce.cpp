#include <doctest.h>

#include <random>

#include "support.hpp"
#include "uht/generator.hpp"
#include "uht/reduce.hpp"

using namespace uht;
using uht::test::make_graph;

TEST_CASE("simple input is left alone") {
  PlanarInstance p = random_planar_rotation(7, 12, 1);
  ParityDrawing d = embedding_drawing(p.graph, p.rotation);
  Reduction r = reduce(d, {vid(0), vid(3)});
  CHECK(r.drawing == d);
  CHECK(r.log.subdivisions.empty());
  CHECK(r.log.removed.empty());
}

TEST_CASE("a loop at a W vertex becomes a triangle") {
  Multigraph g = make_graph(1, {{0, 0}});
  RotationSystem rot;
  rot.set(vid(0), {{eid(0), 0}, {eid(0), 1}});
  Reduction r = reduce(embedding_drawing(g, rot), {vid(0)});
  CHECK(r.drawing.graph.vertex_count() == 3);
  CHECK(r.drawing.graph.edge_count() == 3);
  CHECK(r.drawing.graph.is_simple());
  CHECK(r.log.subdivisions.size() == 2);
  CHECK(r.log.removed.empty());
  CHECK(genus(r.drawing.rotation) == 0);
  for (VertexId v : r.drawing.graph.vertices()) CHECK(r.drawing.graph.degree(v) == 2);
}

TEST_CASE("a double edge at a W endpoint separates") {
  Multigraph g = make_graph(2, {{0, 1}, {0, 1}});
  ParityDrawing d = embedding_drawing(g, sorted_rotation(g));
  Reduction r = reduce(d, {vid(0)});
  CHECK(r.log.subdivisions.size() == 2);
  CHECK(r.log.removed.empty());
  CHECK(r.drawing.graph.is_simple());
  CHECK(r.drawing.graph.degree(vid(1)) == 2);
  const Edge& a = r.drawing.graph.edge(eid(0));
  const Edge& b = r.drawing.graph.edge(eid(1));
  CHECK(a.touches(vid(1)));
  CHECK(b.touches(vid(1)));
  CHECK(a.other(vid(1)) != b.other(vid(1)));
}

TEST_CASE("stubs carry no parity and take the original slot") {
  Multigraph g = make_graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
  ParityDrawing d = embedding_drawing(g, sorted_rotation(g));
  d.parity.set(eid(0), eid(2), true);
  Reduction r = reduce(d, {vid(0)}, {.check_hypotheses = false});
  for (const Subdivision& s : r.log.subdivisions) {
    for (const auto& [e, f] : r.drawing.parity.odd_pairs()) {
      CHECK(e != s.stub);
      CHECK(f != s.stub);
    }
    const std::size_t at = position_of(d.rotation.at(s.at), {s.edge, s.side});
    CHECK(r.drawing.rotation.at(s.at)[at] == EdgeEnd{s.stub, 0});
  }
  CHECK(r.drawing.parity.get(eid(0), eid(2)));
}

TEST_CASE("loops and parallel copies away from W are removed and reinserted") {
  // Vertex 0 carries a loop, 1-2 a double edge; W = {3}.
  Multigraph g = make_graph(4, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 0}});
  RotationSystem rot;
  rot.set(vid(0), {{eid(0), 0}, {eid(0), 1}, {eid(1), 0}, {eid(5), 1}});
  rot.set(vid(1), {{eid(1), 1}, {eid(2), 0}, {eid(3), 0}});
  rot.set(vid(2), {{eid(2), 1}, {eid(4), 0}, {eid(3), 1}});
  rot.set(vid(3), {{eid(4), 1}, {eid(5), 0}});
  REQUIRE(genus(rot) == 0);
  ParityDrawing d = embedding_drawing(g, rot);
  Reduction r = reduce(d, {vid(3)});
  CHECK(r.drawing.graph.is_simple());
  REQUIRE(r.log.removed.size() == 2);
  CHECK_FALSE(r.log.removed[0].anchor);
  CHECK(r.log.removed[1].anchor == eid(2));

  EmbedResult e = embed_unified({r.drawing, {vid(3)}});
  EmbedResult back = reinsert_and_contract(e, r.log);
  CHECK(genus(back.rotation) == 0);
  check_rotation_matches(back.rotation, g);
  CHECK(back.preserved.contains(vid(3)));
  // The loop's ends are adjacent.
  const Cycle& at0 = back.rotation.at(vid(0));
  const std::size_t p = position_of(at0, {eid(0), 0});
  const std::size_t q = position_of(at0, {eid(0), 1});
  CHECK((q == (p + 1) % at0.size() || p == (q + 1) % at0.size()));
  // The parallel pair bounds a face of length two.
  bool bigon = false;
  for (const auto& face : faces(back.rotation).faces)
    if (face.size() == 2 && std::set{face[0].edge, face[1].edge} == std::set{eid(2), eid(3)}) bigon = true;
  CHECK(bigon);
}

TEST_CASE("contraction alone restores the original ends") {
  Multigraph g = make_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  RotationSystem rot;
  rot.set(vid(0), {{eid(0), 0}, {eid(1), 0}, {eid(2), 0}});
  rot.set(vid(1), {{eid(2), 1}, {eid(1), 1}, {eid(0), 1}});
  REQUIRE(genus(rot) == 0);
  ParityDrawing d = embedding_drawing(g, rot);
  Reduction r = reduce(d, {vid(0), vid(1)});
  CHECK(r.log.removed.empty());
  EmbedResult back = reinsert_and_contract(embed_unified({r.drawing, {vid(0), vid(1)}}), r.log);
  CHECK(same_cyclic_order(back.rotation.at(vid(0)), rot.at(vid(0))));
  CHECK(same_cyclic_order(back.rotation.at(vid(1)), rot.at(vid(1))));
}

TEST_CASE("subdividing at every even vertex") {
  Multigraph g = make_graph(3, {{0, 1}, {0, 1}, {1, 2}});
  ParityDrawing d = embedding_drawing(g, sorted_rotation(g));
  Reduction r = reduce(d, {}, {.subdivide_all_even = true});
  CHECK(r.log.subdivisions.size() == 6);
  CHECK(r.log.removed.empty());
}

TEST_CASE("hypotheses are enforced unless waived") {
  Multigraph g = make_graph(4, {{0, 1}, {0, 1}, {2, 3}});
  ParityDrawing d = embedding_drawing(g, sorted_rotation(g));
  d.parity.set(eid(0), eid(2), true);
  CHECK_THROWS_AS(reduce(d, {}), Error);
  CHECK_NOTHROW(reduce(d, {}, {.check_hypotheses = false}));
}

TEST_CASE("log serialization") {
  Multigraph g = make_graph(2, {{0, 1}, {0, 1}, {1, 1}});
  ParityDrawing d = embedding_drawing(g, sorted_rotation(g));
  Reduction r = reduce(d, {vid(0)}, {.check_hypotheses = false});
  const std::string text = r.log.to_json_lines();
  CHECK(text.find("\"subdivide\"") != std::string::npos);
  CHECK(text.find("\"loop\"") != std::string::npos);
  CHECK(text.find("\"kind\":\"w\"") != std::string::npos);
}

TEST_CASE("random planar multigraphs round-trip") {
  std::mt19937_64 rng(4);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = std::max(1, std::min(n >= 3 ? 3 * n - 6 : 1, n - 1 + static_cast<int>(rng() % 5)));
    PlanarInstance p = random_planar_multigraph(n, m, 3, 2, seed);
    std::set<VertexId> w;
    for (VertexId v : p.graph.vertices())
      if (rng() % 3 == 0) w.insert(v);
    ParityDrawing d = scramble(embedding_drawing(p.graph, p.rotation), w, rng() % 20, seed);
    EmbedResult e = embed_multigraph({d, w});
    CHECK(genus(e.rotation) == 0);
    for (VertexId v : w) CHECK(same_cyclic_order(e.rotation.at(v), d.rotation.at(v)));
  }
}
