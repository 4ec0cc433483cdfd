#include "graphbench/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "graphbench/error.hpp"

namespace graphbench {

std::string_view to_string(Representation repr) {
  return repr == Representation::Csr ? "csr" : "adjmap";
}

Representation parse_representation(std::string_view name) {
  if (name == "csr") return Representation::Csr;
  if (name == "adjmap") return Representation::AdjacencyMap;
  throw Error(ErrorKind::InvalidArgument,
              "unknown representation '" + std::string(name) + "' (expected csr or adjmap)");
}

std::vector<IndexRange> parallel_partition_bounds(std::size_t m, std::size_t workers) {
  if (workers == 0) {
    throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
  }
  std::vector<IndexRange> ranges;
  ranges.reserve(workers);
  const std::size_t base = m / workers;
  const std::size_t extra = m % workers;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t len = base + (w < extra ? 1 : 0);
    ranges.push_back({begin, begin + len});
    begin += len;
  }
  return ranges;
}

CsrGraph::CsrGraph(vertex_t num_vertices, std::vector<std::size_t> row_offsets,
                   std::vector<vertex_t> col_indices, std::vector<double> edge_weights)
    : num_vertices_(num_vertices),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)),
      edge_weights_(std::move(edge_weights)) {
  if (num_vertices_ < 0 || row_offsets_.size() != static_cast<std::size_t>(num_vertices_) + 1) {
    throw Error(ErrorKind::Internal, "row_offsets must have num_vertices + 1 entries");
  }
  if (edge_weights_.size() != col_indices_.size()) {
    throw Error(ErrorKind::Internal, "col_indices and edge_weights differ in length");
  }
  if (row_offsets_.front() != 0 || row_offsets_.back() != col_indices_.size()) {
    throw Error(ErrorKind::Internal, "row_offsets must start at 0 and end at the entry count");
  }
  for (std::size_t r = 0; r + 1 < row_offsets_.size(); ++r) {
    const std::size_t b = row_offsets_[r];
    const std::size_t e = row_offsets_[r + 1];
    if (e < b) {
      throw Error(ErrorKind::Internal, "row_offsets decrease at row " + std::to_string(r));
    }
    for (std::size_t i = b; i < e; ++i) {
      const vertex_t c = col_indices_[i];
      if (c < 0 || c >= num_vertices_) {
        throw Error(ErrorKind::Internal, "column index out of range in row " + std::to_string(r));
      }
      if (i > b && c < col_indices_[i - 1]) {
        throw Error(ErrorKind::Internal, "row " + std::to_string(r) + " is not sorted");
      }
    }
  }
}

bool operator==(const CsrGraph& a, const CsrGraph& b) noexcept {
  if (a.num_vertices_ != b.num_vertices_ || a.row_offsets_ != b.row_offsets_ ||
      a.col_indices_ != b.col_indices_ || a.edge_weights_.size() != b.edge_weights_.size()) {
    return false;
  }
  return std::equal(a.edge_weights_.begin(), a.edge_weights_.end(), b.edge_weights_.begin(),
                    [](double x, double y) {
                      return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
                    });
}

AdjMapGraph::AdjMapGraph(vertex_t num_vertices, Map map)
    : num_vertices_(num_vertices), map_(std::move(map)) {
  for (const auto& [u, adj] : map_) {
    if (u < 0 || u >= num_vertices_) {
      throw Error(ErrorKind::Internal, "adjacency key out of range");
    }
    num_entries_ += adj.ids.size();
  }
}

bool operator==(const AdjMapGraph& a, const AdjMapGraph& b) {
  if (a.num_vertices_ != b.num_vertices_ || a.num_entries_ != b.num_entries_) return false;
  for (vertex_t u = 0; u < a.num_vertices_; ++u) {
    const NeighborView x = a.neighbors(u);
    const NeighborView y = b.neighbors(u);
    if (x.size() != y.size() || !std::equal(x.ids().begin(), x.ids().end(), y.ids().begin())) {
      return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::bit_cast<std::uint64_t>(x.weights()[i]) !=
          std::bit_cast<std::uint64_t>(y.weights()[i])) {
        return false;
      }
    }
  }
  return true;
}

Graph::Graph(CsrGraph csr, std::size_t num_input_edges)
    : num_vertices_(csr.num_vertices()),
      num_input_edges_(num_input_edges),
      storage_(std::move(csr)) {}

Graph::Graph(AdjMapGraph adj, std::size_t num_input_edges)
    : num_vertices_(adj.num_vertices()),
      num_input_edges_(num_input_edges),
      storage_(std::move(adj)) {}

std::size_t Graph::num_entries() const noexcept {
  return std::visit([](const auto& g) { return g.num_entries(); }, storage_);
}

Representation Graph::representation() const noexcept {
  return std::holds_alternative<CsrGraph>(storage_) ? Representation::Csr
                                                    : Representation::AdjacencyMap;
}

NeighborView Graph::neighbors(vertex_t u) const {
  if (u < 0 || u >= num_vertices_) {
    throw Error(ErrorKind::Bounds, "vertex " + std::to_string(u) + " outside [0, " +
                                       std::to_string(num_vertices_) + ")");
  }
  if (const auto* c = std::get_if<CsrGraph>(&storage_)) return c->neighbors(u);
  return std::get<AdjMapGraph>(storage_).neighbors(u);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.num_input_edges_ == b.num_input_edges_ && a.storage_ == b.storage_;
}

namespace {

struct Entry {
  vertex_t src;
  vertex_t dst;
  double weight;
};

bool entry_less(const Entry& x, const Entry& y) noexcept {
  if (x.src != y.src) return x.src < y.src;
  if (x.dst != y.dst) return x.dst < y.dst;
  return x.weight < y.weight;
}

// Both directions of every non-loop edge, one entry per self-loop, in input
// order within each partition.
std::vector<Entry> mirror_entries(const EdgeList& edges, std::span<const IndexRange> parts) {
  const std::size_t workers = parts.size();
  std::vector<std::size_t> out_begin(workers + 1, 0);
  run_workers(workers, [&](std::size_t w) {
    std::size_t n = 0;
    for (std::size_t e = parts[w].begin; e < parts[w].end; ++e) {
      n += edges.sources[e] == edges.targets[e] ? 1 : 2;
    }
    out_begin[w + 1] = n;
  });
  for (std::size_t w = 0; w < workers; ++w) out_begin[w + 1] += out_begin[w];

  std::vector<Entry> entries(out_begin.back());
  run_workers(workers, [&](std::size_t w) {
    std::size_t pos = out_begin[w];
    for (std::size_t e = parts[w].begin; e < parts[w].end; ++e) {
      const vertex_t u = edges.sources[e];
      const vertex_t v = edges.targets[e];
      const double wt = edges.weights[e];
      entries[pos++] = {u, v, wt};
      if (u != v) entries[pos++] = {v, u, wt};
    }
  });
  return entries;
}

// Comparison sort on (source, target, weight): std::sort per chunk, then
// pairwise std::merge rounds.
void parallel_sort(std::vector<Entry>& entries, std::size_t workers) {
  auto runs = parallel_partition_bounds(entries.size(), workers);
  run_workers(workers, [&](std::size_t w) {
    std::sort(entries.begin() + static_cast<std::ptrdiff_t>(runs[w].begin),
              entries.begin() + static_cast<std::ptrdiff_t>(runs[w].end), entry_less);
  });
  if (runs.size() <= 1) return;

  std::vector<Entry> buffer(entries.size());
  while (runs.size() > 1) {
    const std::size_t pairs = (runs.size() + 1) / 2;
    std::vector<IndexRange> merged(pairs);
    run_workers(pairs, [&](std::size_t p) {
      const IndexRange left = runs[2 * p];
      const auto first = entries.begin();
      const auto out = buffer.begin() + static_cast<std::ptrdiff_t>(left.begin);
      if (2 * p + 1 < runs.size()) {
        const IndexRange right = runs[2 * p + 1];
        std::merge(first + static_cast<std::ptrdiff_t>(left.begin),
                   first + static_cast<std::ptrdiff_t>(left.end),
                   first + static_cast<std::ptrdiff_t>(right.begin),
                   first + static_cast<std::ptrdiff_t>(right.end), out, entry_less);
        merged[p] = {left.begin, right.end};
      } else {
        std::copy(first + static_cast<std::ptrdiff_t>(left.begin),
                  first + static_cast<std::ptrdiff_t>(left.end), out);
        merged[p] = left;
      }
    });
    entries.swap(buffer);
    runs = std::move(merged);
  }
}

CsrFragment make_fragment(std::span<const Entry> sorted, IndexRange range) {
  CsrFragment f;
  f.entry_begin = range.begin;
  if (range.empty()) return f;
  f.first_row = sorted[range.begin].src;
  const vertex_t last_row = sorted[range.end - 1].src;
  f.row_ends.assign(static_cast<std::size_t>(last_row - f.first_row + 1), range.begin);
  f.col_indices.reserve(range.size());
  f.weights.reserve(range.size());
  for (std::size_t i = range.begin; i < range.end; ++i) {
    f.col_indices.push_back(sorted[i].dst);
    f.weights.push_back(sorted[i].weight);
    f.row_ends[static_cast<std::size_t>(sorted[i].src - f.first_row)] = i + 1;
  }
  // rows inside the slice with no entries end where the previous row ended
  for (std::size_t r = 1; r < f.row_ends.size(); ++r) {
    f.row_ends[r] = std::max(f.row_ends[r], f.row_ends[r - 1]);
  }
  return f;
}

}  // namespace

CsrGraph merge_boundary_rows(vertex_t num_vertices, std::span<const CsrFragment> fragments) {
  const auto n = static_cast<std::size_t>(num_vertices);
  std::vector<std::size_t> row_end(n, 0);
  std::vector<char> claimed(n, 0);
  std::size_t total = 0;
  const CsrFragment* prev = nullptr;

  for (const CsrFragment& f : fragments) {
    if (f.entry_begin != total) {
      throw Error(ErrorKind::Internal, "CSR fragments are not contiguous");
    }
    if (f.col_indices.size() != f.weights.size()) {
      throw Error(ErrorKind::Internal, "CSR fragment arrays differ in length");
    }
    const std::size_t f_end = f.entry_begin + f.col_indices.size();
    total = f_end;
    if (f.row_ends.empty()) {
      if (!f.col_indices.empty()) {
        throw Error(ErrorKind::Internal, "CSR fragment has entries but claims no rows");
      }
      continue;
    }
    if (f.first_row < 0 || f.last_row() >= num_vertices) {
      throw Error(ErrorKind::Internal, "CSR fragment claims rows out of range");
    }
    if (prev != nullptr && prev->last_row() > f.first_row) {
      throw Error(ErrorKind::Internal,
                  "CSR fragments overlap beyond a shared boundary row at row " +
                      std::to_string(f.first_row));
    }
    if (f.row_ends.back() != f_end ||
        !std::is_sorted(f.row_ends.begin(), f.row_ends.end()) ||
        f.row_ends.front() < f.entry_begin) {
      throw Error(ErrorKind::Internal, "CSR fragment row ends are inconsistent");
    }
    for (std::size_t i = 0; i < f.row_ends.size(); ++i) {
      const auto r = static_cast<std::size_t>(f.first_row) + i;
      // two fragments may both claim the boundary row: the later end wins
      row_end[r] = claimed[r] ? std::max(row_end[r], f.row_ends[i]) : f.row_ends[i];
      claimed[r] = 1;
    }
    prev = &f;
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t r = 0; r < n; ++r) {
    offsets[r + 1] = claimed[r] ? row_end[r] : offsets[r];
  }
  std::vector<vertex_t> cols;
  std::vector<double> weights;
  cols.reserve(total);
  weights.reserve(total);
  for (const CsrFragment& f : fragments) {
    cols.insert(cols.end(), f.col_indices.begin(), f.col_indices.end());
    weights.insert(weights.end(), f.weights.begin(), f.weights.end());
  }
  return CsrGraph(num_vertices, std::move(offsets), std::move(cols), std::move(weights));
}

CsrGraph build_csr(const EdgeList& edges, std::size_t workers) {
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
  edges.check();
  const auto input_parts = parallel_partition_bounds(edges.count(), workers);
  std::vector<Entry> entries = mirror_entries(edges, input_parts);
  parallel_sort(entries, workers);

  const auto parts = parallel_partition_bounds(entries.size(), workers);
  std::vector<CsrFragment> fragments(workers);
  run_workers(workers, [&](std::size_t w) { fragments[w] = make_fragment(entries, parts[w]); });
  return merge_boundary_rows(edges.num_vertices, fragments);
}

AdjMapGraph build_adjmap(const EdgeList& edges, std::size_t workers) {
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
  edges.check();
  const auto parts = parallel_partition_bounds(edges.count(), workers);

  // private per-worker buckets; no shared map is written concurrently
  std::vector<AdjMapGraph::Map> local(workers);
  run_workers(workers, [&](std::size_t w) {
    auto& map = local[w];
    for (std::size_t e = parts[w].begin; e < parts[w].end; ++e) {
      const vertex_t u = edges.sources[e];
      const vertex_t v = edges.targets[e];
      const double wt = edges.weights[e];
      auto& a = map[u];
      a.ids.push_back(v);
      a.weights.push_back(wt);
      if (u != v) {
        auto& b = map[v];
        b.ids.push_back(u);
        b.weights.push_back(wt);
      }
    }
  });

  // each worker owns the vertices congruent to its index, concatenates their
  // buckets in partition order and sorts them into canonical order
  std::vector<AdjMapGraph::Map> owned(workers);
  run_workers(workers, [&](std::size_t w) {
    auto& out = owned[w];
    for (const auto& map : local) {
      for (const auto& [u, adj] : map) {
        if (static_cast<std::size_t>(u) % workers != w) continue;
        auto& dst = out[u];
        dst.ids.insert(dst.ids.end(), adj.ids.begin(), adj.ids.end());
        dst.weights.insert(dst.weights.end(), adj.weights.begin(), adj.weights.end());
      }
    }
    std::vector<Neighbor> scratch;
    for (auto& [u, adj] : out) {
      scratch.clear();
      for (std::size_t i = 0; i < adj.ids.size(); ++i) scratch.push_back({adj.ids[i], adj.weights[i]});
      std::sort(scratch.begin(), scratch.end(), [](const Neighbor& x, const Neighbor& y) {
        return x.vertex != y.vertex ? x.vertex < y.vertex : x.weight < y.weight;
      });
      for (std::size_t i = 0; i < scratch.size(); ++i) {
        adj.ids[i] = scratch[i].vertex;
        adj.weights[i] = scratch[i].weight;
      }
    }
  });

  AdjMapGraph::Map merged;
  std::size_t keys = 0;
  for (const auto& m : owned) keys += m.size();
  merged.reserve(keys);
  for (auto& m : owned) {
    for (auto& [u, adj] : m) merged.emplace(u, std::move(adj));
  }
  return AdjMapGraph(edges.num_vertices, std::move(merged));
}

Graph build(const EdgeList& edges, Representation repr, std::size_t workers) {
  if (repr == Representation::Csr) return Graph(build_csr(edges, workers), edges.count());
  return Graph(build_adjmap(edges, workers), edges.count());
}

}  // namespace graphbench
