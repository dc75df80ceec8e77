#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "uht/drawing.hpp"
#include "uht/geometry.hpp"

namespace uht {

struct PlanarInstance {
  Multigraph graph;
  RotationSystem rotation;  // genus 0
};

/// Seeded random spanning forest grown into a planar map by inserting edges
/// across faces. Vertices are 0..n-1, edges 0..m-1.
PlanarInstance random_planar_rotation(int n, int m, std::uint64_t seed);

/// k random adjacent swaps at vertices outside w. Pairs of parallel edges
/// whose other common endpoint lies in w are never swapped.
ParityDrawing scramble(const ParityDrawing& d, const std::set<VertexId>& w, std::size_t k,
                       std::uint64_t seed);

/// Adds up to `loops` loops and parallel copies (at most `max_copies` per
/// bundle) to a planar map, keeping it planar.
PlanarInstance random_planar_multigraph(int n, int m, int max_copies, int loops, std::uint64_t seed);

Multigraph complete_graph(int n);
Multigraph complete_bipartite(int a, int b);

/// Hub 0 joined to a rim cycle 1..n-1, drawn convexly.
PlanarInstance wheel(int n);

/// Three internally disjoint paths from vertex 0 to vertex 1 with the given
/// edge counts, embedded in the plane.
PlanarInstance theta(int p, int q, int r);

/// Integer points in [0, grid)^2 retried until the straight-line drawing is
/// in general position.
GeometricDrawing random_straight_line_drawing(const Multigraph& g, std::uint64_t seed, int grid = 1000);

/// Like random_straight_line_drawing with `bends` random bend points per edge;
/// loops get at least two.
GeometricDrawing random_polyline_drawing(const Multigraph& g, std::uint64_t seed, int bends = 1,
                                         int grid = 1000);

/// Adjacent swaps at each listed vertex until its rotation matches the target.
ParityDrawing realize_rotations(const ParityDrawing& d, const std::map<VertexId, Cycle>& targets);

/// k random edge-vertex moves.
ParityDrawing random_moves(const ParityDrawing& d, std::size_t k, std::uint64_t seed);

}  // namespace uht
