#include "graphbench/sssp.hpp"

#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "graphbench/error.hpp"

namespace graphbench {
namespace {

void check_weight(vertex_t u, vertex_t v, double w) {
  if (!(w >= 0.0)) {
    throw Error(ErrorKind::Domain, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                       ") has negative or NaN weight; Dijkstra requires w >= 0");
  }
}

void heap_dijkstra(const Graph& g, SsspResult& r) {
  using Item = std::pair<double, vertex_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, r.source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > r.dist[static_cast<std::size_t>(u)]) continue;  // stale
    const NeighborView adj = g.neighbors(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const vertex_t v = adj.ids()[i];
      const double w = adj.weights()[i];
      check_weight(u, v, w);
      if (relax(u, v, w, r.dist, r.prev)) heap.emplace(r.dist[static_cast<std::size_t>(v)], v);
    }
  }
}

void linear_dijkstra(const Graph& g, SsspResult& r) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> in_queue(n, 1);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_queue[v] && (best == n || r.dist[v] < r.dist[best])) best = v;
    }
    // only unreachable vertices remain
    if (std::isinf(r.dist[best])) break;
    in_queue[best] = 0;
    const auto u = static_cast<vertex_t>(best);
    const NeighborView adj = g.neighbors(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const vertex_t v = adj.ids()[i];
      const double w = adj.weights()[i];
      check_weight(u, v, w);
      if (in_queue[static_cast<std::size_t>(v)]) relax(u, v, w, r.dist, r.prev);
    }
  }
}

}  // namespace

SsspResult sssp_dijkstra(const Graph& g, vertex_t source, SsspQueue queue) {
  if (source < 0 || source >= g.num_vertices()) {
    throw Error(ErrorKind::Bounds, "source " + std::to_string(source) + " outside [0, " +
                                       std::to_string(g.num_vertices()) + ")");
  }
  SsspResult r;
  r.source = source;
  r.dist.assign(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  r.prev.assign(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  r.dist[static_cast<std::size_t>(source)] = 0.0;
  if (queue == SsspQueue::LinearScan) {
    linear_dijkstra(g, r);
  } else {
    heap_dijkstra(g, r);
  }
  return r;
}

}  // namespace graphbench
