#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

namespace uht {

enum class VertexId : std::int32_t {};
enum class EdgeId : std::int32_t {};

constexpr VertexId vid(std::int32_t v) { return static_cast<VertexId>(v); }
constexpr EdgeId eid(std::int32_t e) { return static_cast<EdgeId>(e); }
constexpr std::int32_t raw(VertexId v) { return static_cast<std::int32_t>(v); }
constexpr std::int32_t raw(EdgeId e) { return static_cast<std::int32_t>(e); }

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << raw(v); }
inline std::ostream& operator<<(std::ostream& os, EdgeId e) { return os << raw(e); }

/// One end of an edge. side 0 sits at the edge's first endpoint, side 1 at the
/// second; a loop contributes both ends to the same vertex.
struct EdgeEnd {
  EdgeId edge{};
  std::uint8_t side = 0;

  EdgeEnd opposite() const { return {edge, static_cast<std::uint8_t>(1 - side)}; }
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const EdgeEnd& end) {
  return os << raw(end.edge) << (end.side == 0 ? ".a" : ".b");
}

/// Clockwise cyclic order of edge ends around one vertex. The starting index
/// carries no meaning.
using Cycle = std::vector<EdgeEnd>;

}  // namespace uht
