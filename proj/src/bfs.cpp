#include "graphbench/bfs.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <string>

#include "graphbench/error.hpp"

namespace graphbench {

std::size_t BfsResult::reached() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(level.begin(), level.end(), [](std::int64_t l) { return l != kUnreached; }));
}

namespace {

void check_root(const Graph& g, vertex_t root) {
  if (root < 0 || root >= g.num_vertices()) {
    throw Error(ErrorKind::Bounds, "root " + std::to_string(root) + " outside [0, " +
                                       std::to_string(g.num_vertices()) + ")");
  }
}

BfsResult init_result(const Graph& g, vertex_t root) {
  BfsResult r;
  r.root = root;
  r.level.assign(static_cast<std::size_t>(g.num_vertices()), kUnreached);
  r.parent.assign(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  r.level[static_cast<std::size_t>(root)] = 0;
  r.parent[static_cast<std::size_t>(root)] = root;
  return r;
}

std::size_t default_chunk(std::size_t frontier_size, std::size_t workers, std::size_t configured) {
  if (configured != 0) return configured;
  return std::max<std::size_t>(64, frontier_size / (4 * workers));
}

// Claims the unvisited neighbors of `chunk` at `next_depth`. Only the thread
// whose compare-exchange succeeds writes the parent and enqueues the vertex.
std::size_t claim_neighbors(const Graph& g, std::span<const vertex_t> chunk,
                            std::int64_t next_depth, std::span<std::int64_t> level,
                            std::span<vertex_t> parent, std::vector<vertex_t>& out) {
  std::size_t claims = 0;
  for (const vertex_t v : chunk) {
    for (const vertex_t u : g.neighbors(v).ids()) {
      std::atomic_ref<std::int64_t> slot(level[static_cast<std::size_t>(u)]);
      if (slot.load(std::memory_order_relaxed) != kUnreached) continue;
      std::int64_t expected = kUnreached;
      if (slot.compare_exchange_strong(expected, next_depth, std::memory_order_relaxed)) {
        parent[static_cast<std::size_t>(u)] = v;
        out.push_back(u);
        ++claims;
      }
    }
  }
  return claims;
}

}  // namespace

BfsResult bfs_sequential(const Graph& g, vertex_t root) {
  check_root(g, root);
  BfsResult r = init_result(g, root);
  std::vector<vertex_t> queue(static_cast<std::size_t>(g.num_vertices()));
  std::size_t head = 0;
  std::size_t tail = 0;
  queue[tail++] = root;
  while (head < tail) {
    const vertex_t node = queue[head++];
    const std::int64_t next = r.level[static_cast<std::size_t>(node)] + 1;
    for (const vertex_t u : g.neighbors(node).ids()) {
      const auto ui = static_cast<std::size_t>(u);
      if (r.level[ui] != kUnreached) continue;
      r.level[ui] = next;
      r.parent[ui] = node;
      queue[tail++] = u;
    }
  }
  return r;
}

BfsResult bfs_parallel(const Graph& g, vertex_t root, std::size_t workers,
                       const BfsOptions& options, BfsTrace* trace) {
  check_root(g, root);
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
  BfsResult r = init_result(g, root);
  const auto n = static_cast<std::size_t>(g.num_vertices());

  // Every vertex enters a frontier at most once, so N slots always suffice.
  std::vector<vertex_t> frontier(n);
  std::vector<vertex_t> next(n);
  frontier[0] = root;
  std::size_t frontier_size = 1;
  std::int64_t depth = 0;
  std::size_t chunk = default_chunk(frontier_size, workers, options.chunk_size);
  bool done = false;
  std::atomic<std::size_t> cursor{0};
  std::atomic<std::size_t> next_size{0};
  std::atomic<std::size_t> claims{0};

  auto end_of_level = [&]() noexcept {
    if (trace != nullptr) trace->frontier_sizes.push_back(frontier_size);
    frontier.swap(next);
    frontier_size = next_size.load(std::memory_order_relaxed);
    next_size.store(0, std::memory_order_relaxed);
    cursor.store(0, std::memory_order_relaxed);
    ++depth;
    done = frontier_size == 0;
    chunk = default_chunk(frontier_size, workers, options.chunk_size);
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(workers), end_of_level);

  run_workers(workers, [&](std::size_t) {
    std::vector<vertex_t> local;
    std::size_t mine = 0;
    while (true) {
      const std::size_t size = frontier_size;
      const std::size_t step = chunk;
      const std::span<const vertex_t> current(frontier.data(), size);
      for (;;) {
        const std::size_t b = cursor.fetch_add(step, std::memory_order_relaxed);
        if (b >= size) break;
        mine += claim_neighbors(g, current.subspan(b, std::min(step, size - b)), depth + 1,
                                r.level, r.parent, local);
      }
      const std::size_t at = next_size.fetch_add(local.size(), std::memory_order_relaxed);
      std::copy(local.begin(), local.end(), next.begin() + static_cast<std::ptrdiff_t>(at));
      local.clear();
      sync.arrive_and_wait();
      if (done) break;
    }
    claims.fetch_add(mine, std::memory_order_relaxed);
  });

  if (trace != nullptr) trace->claims = claims.load();
  return r;
}

Frontier expand_level(const Graph& g, const Frontier& frontier, std::span<std::int64_t> level,
                      std::span<vertex_t> parent, std::size_t workers) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (level.size() != n || parent.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "level/parent arrays must have num_vertices entries");
  }
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
  for (const vertex_t v : frontier.current) {
    if (v < 0 || static_cast<std::size_t>(v) >= n ||
        level[static_cast<std::size_t>(v)] != frontier.depth) {
      throw Error(ErrorKind::InvalidArgument,
                  "frontier vertex " + std::to_string(v) + " is not at depth " +
                      std::to_string(frontier.depth));
    }
  }

  const std::span<const vertex_t> current(frontier.current);
  const std::size_t step = default_chunk(current.size(), workers, 0);
  std::atomic<std::size_t> cursor{0};
  std::vector<std::vector<vertex_t>> found(workers);
  run_workers(workers, [&](std::size_t w) {
    for (;;) {
      const std::size_t b = cursor.fetch_add(step, std::memory_order_relaxed);
      if (b >= current.size()) break;
      claim_neighbors(g, current.subspan(b, std::min(step, current.size() - b)),
                      frontier.depth + 1, level, parent, found[w]);
    }
  });

  Frontier out;
  out.depth = frontier.depth + 1;
  for (auto& part : found) out.current.insert(out.current.end(), part.begin(), part.end());
  return out;
}

}  // namespace graphbench
