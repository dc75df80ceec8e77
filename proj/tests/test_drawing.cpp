#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "uht/drawing.hpp"
#include "uht/generator.hpp"

using namespace uht;
using uht::test::ends;
using uht::test::make_graph;

namespace {

ParityDrawing planar_k4() {
  PlanarInstance p = wheel(4);
  return embedding_drawing(p.graph, p.rotation);
}

ParityDrawing triangle() {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  RotationSystem r;
  r.set(vid(0), ends(g, vid(0), {0, 2}));
  r.set(vid(1), ends(g, vid(1), {1, 0}));
  r.set(vid(2), ends(g, vid(2), {2, 1}));
  return embedding_drawing(g, r);
}

std::size_t differing_bits(const ParityVector& x, const ParityVector& y) {
  std::vector<std::pair<EdgeId, EdgeId>> diff;
  std::set_symmetric_difference(x.odd_pairs().begin(), x.odd_pairs().end(), y.odd_pairs().begin(),
                                y.odd_pairs().end(), std::back_inserter(diff));
  return diff.size();
}

}  // namespace

TEST_CASE("cycles compare cyclically") {
  Cycle c{{eid(3), 0}, {eid(1), 1}, {eid(2), 0}};
  Cycle rotated{{eid(1), 1}, {eid(2), 0}, {eid(3), 0}};
  Cycle reversed{{eid(2), 0}, {eid(1), 1}, {eid(3), 0}};
  CHECK(same_cyclic_order(c, rotated));
  CHECK_FALSE(same_cyclic_order(c, reversed));
  CHECK(canonical_cycle(c).front() == EdgeEnd{eid(1), 1});
}

TEST_CASE("parity lookups") {
  ParityDrawing d = planar_k4();
  for (const auto& [e, ed] : d.graph.edges())
    for (const auto& [f, fd] : d.graph.edges())
      if (e != f) CHECK_FALSE(parity(d, e, f));
  CHECK_THROWS_AS(parity(d, eid(0), eid(99)), Error);
  ParityDrawing s = adjacent_swap(d, vid(0), 0);
  const Cycle& c = d.rotation.at(vid(0));
  CHECK(parity(s, c[0].edge, c[1].edge));
}

TEST_CASE("independent evenness") {
  ParityDrawing d = planar_k4();
  CHECK(is_independently_even(d));
  // Convex K4: the diagonals 0-2 and 1-3 cross once.
  auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
  ParityDrawing convex = embedding_drawing(g, sorted_rotation(g));
  convex.parity.set(eid(4), eid(5), true);
  CHECK_FALSE(is_independently_even(convex));
  CHECK(odd_independent_pairs(convex).size() == 1);
  ParityDrawing adjacent = d;
  adjacent.parity.set(eid(0), eid(1), true);
  REQUIRE(d.graph.adjacent(eid(0), eid(1)));
  CHECK(is_independently_even(adjacent));
}

TEST_CASE("even vertices") {
  ParityDrawing d = planar_k4();
  CHECK(even_vertices(d).size() == 4);
  ParityDrawing s = adjacent_swap(d, vid(2), 1);
  CHECK_FALSE(is_even_vertex(s, vid(2)));
  auto path = make_graph(2, {{0, 1}});
  CHECK(is_even_vertex(embedding_drawing(path, sorted_rotation(path)), vid(0)));
}

TEST_CASE("edge-vertex moves") {
  auto g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  ParityDrawing d = embedding_drawing(g, sorted_rotation(g));
  ParityDrawing moved = edge_vertex_move(d, eid(0), vid(2));
  CHECK(moved.parity.odd_count() == 3);
  CHECK(moved.parity.get(eid(0), eid(1)));
  CHECK(moved.parity.get(eid(0), eid(3)));
  CHECK(moved.parity.get(eid(0), eid(5)));
  CHECK(moved.rotation == d.rotation);
  CHECK(edge_vertex_move(moved, eid(0), vid(2)) == d);
  CHECK(edge_vertex_move(d, eid(0), vid(4)) == d);
  CHECK_THROWS_AS(edge_vertex_move(d, eid(0), vid(1)), Error);

  // A loop at the vertex is crossed twice.
  Multigraph h = make_graph(3, {{0, 1}, {2, 2}, {2, 1}});
  ParityDrawing hl = embedding_drawing(h, sorted_rotation(h));
  ParityDrawing hm = edge_vertex_move(hl, eid(0), vid(2));
  CHECK_FALSE(hm.parity.get(eid(0), eid(1)));
  CHECK(hm.parity.get(eid(0), eid(2)));
}

TEST_CASE("adjacent swaps") {
  ParityDrawing d = planar_k4();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const VertexId v = vid(static_cast<int>(rng() % 4));
    const std::size_t i = rng() % 3;
    ParityDrawing s = adjacent_swap(d, v, i);
    CHECK(differing_bits(s.parity, d.parity) == 1);
    const Cycle& before = d.rotation.at(v);
    const Cycle& after = s.rotation.at(v);
    CHECK(after[i] == before[(i + 1) % 3]);
    CHECK(after[(i + 1) % 3] == before[i]);
    CHECK(adjacent_swap(s, v, i) == d);
  }
  ParityDrawing t = triangle();
  ParityDrawing ts = adjacent_swap(t, vid(0), 0);
  CHECK(ts.parity.get(eid(0), eid(2)));
  CHECK_FALSE(is_even_vertex(ts, vid(0)));
  auto leaf = make_graph(2, {{0, 1}});
  CHECK_THROWS_AS(adjacent_swap(embedding_drawing(leaf, sorted_rotation(leaf)), vid(0), 0), Error);
}

TEST_CASE("pulling an end across the anchor") {
  ParityDrawing d = planar_k4();
  const Cycle& hub = d.rotation.at(vid(0));
  const EdgeId anchor = hub[0].edge;
  const EdgeId f = hub[1].edge;
  ParityDrawing odd = adjacent_swap(d, vid(0), 0);
  REQUIRE(odd.parity.get(f, anchor));
  ParityDrawing pulled = pull_across_anchor(odd, vid(0), f, anchor);
  CHECK_FALSE(pulled.parity.get(f, anchor));
  const Cycle& c = pulled.rotation.at(vid(0));
  const std::size_t pa = std::find_if(c.begin(), c.end(), [&](EdgeEnd x) { return x.edge == anchor; }) - c.begin();
  CHECK(c[(pa + 1) % c.size()].edge == f);

  ParityDrawing twice = pull_across_anchor(pull_across_anchor(odd, vid(0), f, anchor), vid(0), f, anchor);
  CHECK(twice.parity.get(f, anchor) == odd.parity.get(f, anchor));

  // The walk swaps past every end in between, and each of those pairs flips.
  const EdgeId g = hub[2].edge;
  ParityDrawing far = pull_across_anchor(d, vid(0), g, anchor);
  CHECK(far.parity.get(g, anchor));
  CHECK(far.parity.odd_count() == 1);
  CHECK_THROWS_AS(pull_across_anchor(d, vid(0), anchor, anchor), Error);
}

TEST_CASE("making a vertex even") {
  ParityDrawing d = planar_k4();
  CHECK(make_vertex_even(d, vid(0), d.rotation.at(vid(0))[0].edge) == d);

  // One odd consecutive pair away from the anchor needs one swap.
  const Cycle& hub = d.rotation.at(vid(0));
  ParityDrawing s = adjacent_swap(d, vid(0), 1);
  EvenStats stats;
  ParityDrawing e = make_vertex_even(s, vid(0), hub[0].edge, &stats);
  CHECK(stats.swaps == 1);
  CHECK(stats.pulls == 0);
  CHECK(is_even_vertex(e, vid(0)));

  PlanarInstance w5 = wheel(5);
  ParityDrawing base = embedding_drawing(w5.graph, w5.rotation);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    ParityDrawing x = base;
    for (int k = 0; k < 6; ++k) x = adjacent_swap(x, vid(0), rng() % 4);
    EvenStats st;
    ParityDrawing y = make_vertex_even(x, vid(0), w5.graph.incident(vid(0)).front(), &st);
    CHECK(is_even_vertex(y, vid(0)));
    CHECK(st.swaps <= 6);
    CHECK(is_planar_rotation(y.rotation));
  }
}

TEST_CASE("restriction") {
  ParityDrawing d = planar_k4();
  CHECK(restrict(d, d.graph) == d);
  Multigraph single;
  const Edge& e0 = d.graph.edge(eid(0));
  single.add_vertex(e0.a);
  single.add_vertex(e0.b);
  single.add_edge(eid(0), e0.a, e0.b);
  ParityDrawing r = restrict(d, single);
  CHECK(r.parity.odd_count() == 0);
  CHECK(r.rotation.at(e0.a).size() == 1);
  Multigraph foreign = make_graph(2, {{0, 1}});
  foreign.add_vertex(vid(9));
  CHECK_THROWS_AS(restrict(d, foreign), Error);
}

TEST_CASE("faces and genus") {
  CHECK(faces(triangle().rotation).faces.size() == 2);
  ParityDrawing k4 = planar_k4();
  FaceSet fs = faces(k4.rotation);
  CHECK(fs.faces.size() == 4);
  std::size_t darts = 0;
  for (const auto& f : fs.faces) darts += f.size();
  CHECK(darts == 2 * k4.graph.edge_count());
  CHECK(genus(k4.rotation) == 0);
  CHECK(genus(k4.rotation.reflected()) == 0);

  auto tree = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    RotationSystem r = sorted_rotation(tree);
    Cycle& c = r.at(vid(0));
    std::shuffle(c.begin(), c.end(), rng);
    CHECK(genus(r) == 0);
    CHECK(faces(r).faces.size() == 1);
  }

  auto two = make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  FaceSet ft = faces(sorted_rotation(two));
  CHECK(ft.per_component == std::vector<std::size_t>{2, 2, 1});
}

TEST_CASE("every rotation system of K5 has at most five faces") {
  Multigraph k5 = complete_graph(5);
  std::vector<Cycle> base;
  for (VertexId v : k5.vertices()) base.push_back(k5.ends_at(v));
  std::vector<Cycle> cur = base;
  std::size_t systems = 0, max_faces = 0;
  int min_gen = 99;
  // Odometer over the orders of each vertex with its first end fixed.
  for (;;) {
    RotationSystem r;
    for (int v = 0; v < 5; ++v) r.set(vid(v), cur[v]);
    ++systems;
    max_faces = std::max(max_faces, faces(r).faces.size());
    min_gen = std::min(min_gen, genus(r));
    int v = 0;
    while (v < 5 && !std::next_permutation(cur[v].begin() + 1, cur[v].end())) ++v;
    if (v == 5) break;
  }
  CHECK(systems == 7776);
  CHECK(max_faces <= 5);
  CHECK(min_gen == 1);
}

TEST_CASE("reflection preserves genus") {
  std::mt19937_64 rng(9);
  Multigraph k5 = complete_graph(5);
  for (int trial = 0; trial < 30; ++trial) {
    RotationSystem r = sorted_rotation(k5);
    for (VertexId v : k5.vertices()) {
      Cycle& c = r.at(v);
      std::shuffle(c.begin(), c.end(), rng);
    }
    CHECK(genus(r) == genus(r.reflected()));
  }
}

TEST_CASE("hypothesis predicates hold on embeddings") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PlanarInstance p = random_planar_rotation(9, 16, seed);
    ParityDrawing d = embedding_drawing(p.graph, p.rotation);
    CHECK(is_independently_even(d));
    CHECK(even_vertices(d) == p.graph.vertices());
    CHECK(satisfies_hypotheses(d, p.graph.vertices()));
  }
}
