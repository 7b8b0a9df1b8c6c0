#pragma once

#include <cstddef>
#include <cstdint>

namespace dfsburn {

/// Limits for the exhaustive (exponential) routines. Linear-time routines
/// ignore these.
struct Budget {
  /// Edge-subset routines (spanning-tree enumeration, Tutte subset sums).
  std::size_t max_edges = 24;
  /// Non-root vertices accepted by the subset-checking parking oracle.
  std::size_t max_oracle_vertices = 20;
  /// Candidate vectors examined by parking-function enumeration.
  std::uint64_t max_candidates = std::uint64_t{1} << 22;
  /// Vertices accepted when listing every reverse-degree labeling.
  std::size_t max_labeling_vertices = 8;
};

}  // namespace dfsburn
