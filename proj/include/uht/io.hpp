#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "uht/drawing.hpp"
#include "uht/geometry.hpp"

namespace uht {

/// Everything the line formats can say. Several files may be read into one
/// document. Vertices must come before the edges that use them; other lines
/// may appear in any order.
///
///   v <id>                      vertex
///   e <id> <u> <v>              edge
///   rot <vid> <end> ...         clockwise rotation; an end is <eid>, or
///                               <eid>.a / <eid>.b (required for loops)
///   odd <eid> <eid>             odd crossing pair
///   coord <vid> <x> <y>         vertex position
///   poly <eid> <x> <y> ...      bend points of an edge, first endpoint to second
///   W <vid> ...                 constrained vertices
///   preserved <vid> ...         written by embed, read back as information
struct Document {
  Multigraph graph;
  RotationSystem rotation;
  ParityVector parity;
  std::map<VertexId, Point> coords;
  std::map<EdgeId, std::vector<Point>> bends;
  std::set<VertexId> w;
  std::set<VertexId> preserved;

  /// rot lines not yet matched against the edges.
  struct RotLine {
    VertexId v;
    std::vector<std::string> ends;
    std::string where;
  };
  std::vector<RotLine> unresolved;

  bool has_rotation() const { return !rotation.cycles().empty(); }
  bool has_geometry() const { return !coords.empty(); }
};

/// Appends the contents of `in` to `doc`. `name` prefixes error messages.
void parse_into(Document& doc, std::istream& in, const std::string& name);
/// Turns the rot lines into cycles once every edge is known.
void resolve_rotations(Document& doc);
Document parse_files(const std::vector<std::string>& paths);
Document parse_text(const std::string& text);

/// Polyline drawing from the coord and poly lines.
GeometricDrawing geometry_of(const Document& doc);

/// Drawing described by the document: from coordinates when present,
/// otherwise from its rot and odd lines. Vertices of degree at most one may
/// omit their rot line.
ParityDrawing drawing_of(const Document& doc, const GeometryOptions& options = {});

std::set<VertexId> parse_id_list(const std::string& text);

std::string format_end(const Multigraph& g, EdgeEnd end);
std::string format_graph(const Multigraph& g);
std::string format_rotation(const Multigraph& g, const RotationSystem& r);
std::string format_parity(const ParityVector& p);
std::string format_w(const std::set<VertexId>& w, const std::string& keyword = "W");
std::string format_geometry(const GeometricDrawing& gd);

}  // namespace uht
