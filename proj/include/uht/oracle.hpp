#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "uht/drawing.hpp"

namespace uht {

struct OracleOptions {
  /// Largest number of rotation systems an exhaustive run may visit.
  double budget = 1e8;
  unsigned threads = 1;
};

struct OracleStats {
  std::uint64_t enumerated = 0;
  /// Closed-form count of rotation systems in the search space.
  double space = 0;
};

/// Product of (deg - 1)! over the vertices not in `frozen`.
double rotation_count(const Multigraph& g, const std::set<VertexId>& frozen = {});

int min_genus(const Multigraph& g, const OracleOptions& options = {}, OracleStats* stats = nullptr);

/// A genus-0 rotation system agreeing with `fixed` at every vertex of w, if any.
std::optional<RotationSystem> find_embedding_with_rotations(const Multigraph& g,
                                                            const std::set<VertexId>& w,
                                                            const RotationSystem& fixed,
                                                            const OracleOptions& options = {},
                                                            OracleStats* stats = nullptr);

bool exists_embedding_with_rotations(const Multigraph& g, const std::set<VertexId>& w,
                                     const RotationSystem& fixed, const OracleOptions& options = {},
                                     OracleStats* stats = nullptr);

/// Uniformly random genus-0 rotation system by reservoir sampling over the
/// full enumeration; empty when g is not planar.
std::optional<RotationSystem> sample_planar_rotation(const Multigraph& g, std::uint64_t seed,
                                                     const OracleOptions& options = {});

/// Independent uniform cyclic order at every vertex.
RotationSystem random_rotation(const Multigraph& g, std::uint64_t seed);

}  // namespace uht
