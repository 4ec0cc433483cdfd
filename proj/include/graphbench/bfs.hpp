#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphbench/graph.hpp"

namespace graphbench {

inline constexpr std::int64_t kUnreached = -1;

/// level[v] is the hop distance from root or -1; parent[v] is the BFS-tree
/// parent or -1. The root is its own parent.
struct BfsResult {
  vertex_t root = 0;
  std::vector<std::int64_t> level;
  std::vector<vertex_t> parent;

  std::size_t reached() const noexcept;
  friend bool operator==(const BfsResult&, const BfsResult&) = default;
};

struct Frontier {
  std::vector<vertex_t> current;
  std::int64_t depth = 0;
};

struct BfsOptions {
  /// Vertices per work chunk. 0 selects max(64, |frontier| / (4 * workers)).
  std::size_t chunk_size = 0;
};

/// Optional instrumentation filled by bfs_parallel.
struct BfsTrace {
  std::vector<std::size_t> frontier_sizes;  // one per processed depth
  std::size_t claims = 0;                   // successful level claims
};

/// FIFO-queue BFS. Throws Error(Bounds) on a bad root.
BfsResult bfs_sequential(const Graph& g, vertex_t root);

/// Level-synchronous BFS. One pool of `workers` threads lives for the whole
/// search; a barrier separates depths. A vertex is claimed by compare-exchange
/// of its level from -1 to depth + 1, and the winner records the parent.
/// Levels always equal bfs_sequential; parents may differ.
BfsResult bfs_parallel(const Graph& g, vertex_t root, std::size_t workers,
                       const BfsOptions& options = {}, BfsTrace* trace = nullptr);

/// One synchronized step: claims every unvisited neighbor of the frontier
/// (each exactly once) and returns them as the frontier at depth + 1.
/// level and parent are updated in place.
Frontier expand_level(const Graph& g, const Frontier& frontier, std::span<std::int64_t> level,
                      std::span<vertex_t> parent, std::size_t workers = 1);

}  // namespace graphbench
