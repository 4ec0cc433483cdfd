#pragma once

#include <cstdint>
#include <map>

#include "graphbench/edge_list.hpp"

namespace graphbench {

/// Quadrant probabilities for recursive R-MAT selection. Defaults are the
/// Graph500 reference values.
struct Initiator {
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
};

struct GenParams {
  int scale = 1;
  int edgefactor = 16;
  std::uint64_t seed = 1;
  Initiator initiator;

  /// Throws Error(InvalidArgument) on scale < 1, edgefactor < 1, a
  /// probability outside [0,1] or a sum that misses 1 by more than 1e-12.
  void check() const;
};

/// Independent seeds for the four random streams the generator consumes.
/// Holding `quadrant` fixed while varying the rest changes labels and order
/// but not the degree multiset.
struct GenStreams {
  std::uint64_t quadrant = 0;
  std::uint64_t weight = 0;
  std::uint64_t permutation = 0;
  std::uint64_t shuffle = 0;

  /// Splits a root SplitMix64(seed) into quadrant, weight, permutation and
  /// shuffle streams, in that order.
  static GenStreams from_seed(std::uint64_t seed) noexcept;
};

/// 2^scale vertices and 2^scale * edgefactor edges. Each endpoint pair is
/// picked by one quadrant draw per scale level, then vertex labels are
/// randomly permuted and the edge order shuffled. Weights are uniform in
/// [0, 1). Single-threaded; deterministic in (params, seed).
///
/// Throws Error(Capacity) when the edge count does not fit in vertex_t.
EdgeList generate(const GenParams& params);
EdgeList generate(const GenParams& params, const GenStreams& streams);

/// Undirected degree -> number of vertices with that degree. A self-loop adds
/// 2 to its vertex.
std::map<std::int64_t, std::int64_t> degree_histogram(const EdgeList& edges);

}  // namespace graphbench
