#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace graphbench {

using vertex_t = std::int64_t;

inline constexpr vertex_t kNoVertex = -1;

/// Flat (source, target, weight) tuples. The only hand-off between the
/// generator, the file format and graph construction. Self-loops and
/// duplicate edges are legal.
struct EdgeList {
  vertex_t num_vertices = 0;
  std::vector<vertex_t> sources;
  std::vector<vertex_t> targets;
  std::vector<double> weights;

  std::size_t count() const noexcept { return sources.size(); }

  void push_back(vertex_t u, vertex_t v, double w) {
    sources.push_back(u);
    targets.push_back(v);
    weights.push_back(w);
  }

  void reserve(std::size_t m) {
    sources.reserve(m);
    targets.reserve(m);
    weights.reserve(m);
  }

  /// Throws Error(Validation) if the arrays differ in length or an endpoint
  /// lies outside [0, num_vertices).
  void check() const;

  /// Bitwise equality, weights compared by representation.
  friend bool operator==(const EdgeList& a, const EdgeList& b) noexcept;
};

}  // namespace graphbench
