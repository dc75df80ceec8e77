#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uht/drawing.hpp"

namespace uht {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& p, const Point& q) {
    if (p.x != q.x) return p.x < q.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (p.y != q.y) return p.y < q.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// Parses "-12", "3.25", "1e-3", or "p/q" exactly.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

/// A concrete drawing: vertex points plus one polyline per edge running from
/// the edge's first endpoint to its second.
struct GeometricDrawing {
  Multigraph graph;
  std::map<VertexId, Point> coords;
  std::map<EdgeId, std::vector<Point>> polylines;
};

/// Straight segment per edge.
GeometricDrawing straight_line_drawing(const Multigraph& g, const std::map<VertexId, Point>& coords);

struct GeometryOptions {
  /// Minimum distance between a vertex and any edge not ending there. Zero
  /// leaves only the exact incidence tests.
  double epsilon = 1e-9;
};

struct Violation {
  enum class Kind {
    MalformedPolyline,
    CoincidentVertices,
    EdgeThroughVertex,
    VertexTooClose,
    Touching,
    Overlap,
    SelfIntersection,
    TripleCrossing,
  };
  Kind kind;
  std::vector<EdgeId> edges;
  std::optional<VertexId> vertex;
  double x = 0;
  double y = 0;

  std::string describe() const;
};

std::vector<Violation> validate_general_position(const GeometricDrawing& gd,
                                                 const GeometryOptions& options = {});

/// Transversal interior crossings of the two polylines, mod 2.
bool crossing_parity(const GeometricDrawing& gd, EdgeId e, EdgeId f);

/// Ends at v sorted clockwise by the direction of their first segment,
/// starting from the direction closest to east.
Cycle rotation_at(const GeometricDrawing& gd, VertexId v);

/// Throws GeneralPosition listing every violation found.
ParityDrawing to_parity_drawing(const GeometricDrawing& gd, const GeometryOptions& options = {});

/// Offsets every vertex and bend point by a random amount in [-magnitude, magnitude].
GeometricDrawing jitter(const GeometricDrawing& gd, std::uint64_t seed, const Rational& magnitude);

}  // namespace uht
