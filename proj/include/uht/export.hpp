#pragma once

#include <Eigen/Core>
#include <map>
#include <string>

#include "uht/drawing.hpp"

namespace uht {

/// Barycentric placement per connected component. The longest face of each
/// component is pinned to a regular polygon; components are laid side by side.
std::map<VertexId, Eigen::Vector2d> tutte_layout(const Multigraph& g, const RotationSystem& r);

std::string export_svg(const Multigraph& g, const RotationSystem& r);

/// Undirected DOT graph; each edge carries its end positions in the rotations
/// as tail and head labels.
std::string export_dot(const Multigraph& g, const RotationSystem& r);

}  // namespace uht
