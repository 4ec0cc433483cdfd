#pragma once

#include <limits>
#include <span>
#include <vector>

#include "graphbench/graph.hpp"

namespace graphbench {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// dist[v] is +inf when v is unreachable; prev[v] is -1 for the source and
/// for unreachable vertices.
struct SsspResult {
  vertex_t source = 0;
  std::vector<double> dist;
  std::vector<vertex_t> prev;

  friend bool operator==(const SsspResult&, const SsspResult&) = default;
};

enum class SsspQueue {
  BinaryHeap,  // lazy deletion: stale heap entries are skipped when popped
  LinearScan,  // O(V^2) minimum extraction over the unsettled set
};

/// Dijkstra over non-negative weights. Ties keep the first-settled
/// predecessor; among equal distances the smaller vertex id settles first, so
/// both queue variants produce identical dist and prev.
///
/// Throws Error(Bounds) on a bad source and Error(Domain) when a negative (or
/// NaN) weight is reached.
SsspResult sssp_dijkstra(const Graph& g, vertex_t source,
                         SsspQueue queue = SsspQueue::BinaryHeap);

/// Returns true and updates v when dist[u] + w < dist[v].
inline bool relax(vertex_t u, vertex_t v, double w, std::span<double> dist,
                  std::span<vertex_t> prev) noexcept {
  const double alt = dist[static_cast<std::size_t>(u)] + w;
  if (alt < dist[static_cast<std::size_t>(v)]) {
    dist[static_cast<std::size_t>(v)] = alt;
    prev[static_cast<std::size_t>(v)] = u;
    return true;
  }
  return false;
}

}  // namespace graphbench
