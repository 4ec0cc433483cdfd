#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "graphbench/edge_list.hpp"
#include "graphbench/parallel.hpp"

namespace graphbench {

enum class Representation { AdjacencyMap, Csr };

std::string_view to_string(Representation repr);
/// Accepts "csr" and "adjmap". Throws Error(InvalidArgument) otherwise.
Representation parse_representation(std::string_view name);

struct Neighbor {
  vertex_t vertex = 0;
  double weight = 0.0;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Read-only view over one vertex's adjacency, stored as parallel id and
/// weight arrays by both representations.
class NeighborView {
 public:
  class iterator {
   public:
    using iterator_concept = std::forward_iterator_tag;
    using iterator_category = std::input_iterator_tag;
    using value_type = Neighbor;
    using difference_type = std::ptrdiff_t;
    using reference = Neighbor;
    using pointer = void;

    iterator() = default;
    iterator(const vertex_t* id, const double* weight) : id_(id), weight_(weight) {}

    Neighbor operator*() const { return {*id_, *weight_}; }
    iterator& operator++() {
      ++id_;
      ++weight_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.id_ == b.id_; }

   private:
    const vertex_t* id_ = nullptr;
    const double* weight_ = nullptr;
  };

  NeighborView() = default;
  NeighborView(std::span<const vertex_t> ids, std::span<const double> weights)
      : ids_(ids), weights_(weights) {}

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Neighbor operator[](std::size_t i) const { return {ids_[i], weights_[i]}; }
  std::span<const vertex_t> ids() const noexcept { return ids_; }
  std::span<const double> weights() const noexcept { return weights_; }

  iterator begin() const { return {ids_.data(), weights_.data()}; }
  iterator end() const { return {ids_.data() + ids_.size(), weights_.data() + ids_.size()}; }

  std::vector<Neighbor> to_vector() const { return {begin(), end()}; }

 private:
  std::span<const vertex_t> ids_;
  std::span<const double> weights_;
};

/// Compressed sparse row storage. row_offsets has num_vertices + 1 entries;
/// an empty row repeats the previous offset and the final offset is stored
/// explicitly. Entries within a row are sorted by (neighbor, weight).
class CsrGraph {
 public:
  CsrGraph() : row_offsets_{0} {}
  /// Throws Error(Internal) if the arrays violate the CSR invariants.
  CsrGraph(vertex_t num_vertices, std::vector<std::size_t> row_offsets,
           std::vector<vertex_t> col_indices, std::vector<double> edge_weights);

  vertex_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_entries() const noexcept { return col_indices_.size(); }
  std::span<const std::size_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const vertex_t> col_indices() const noexcept { return col_indices_; }
  std::span<const double> edge_weights() const noexcept { return edge_weights_; }

  NeighborView neighbors(vertex_t u) const noexcept {
    const auto r = static_cast<std::size_t>(u);
    const std::size_t b = row_offsets_[r];
    const std::size_t n = row_offsets_[r + 1] - b;
    return {std::span(col_indices_).subspan(b, n), std::span(edge_weights_).subspan(b, n)};
  }

  friend bool operator==(const CsrGraph& a, const CsrGraph& b) noexcept;

 private:
  vertex_t num_vertices_ = 0;
  std::vector<std::size_t> row_offsets_;
  std::vector<vertex_t> col_indices_;
  std::vector<double> edge_weights_;
};

struct Adjacency {
  std::vector<vertex_t> ids;
  std::vector<double> weights;
};

/// Hash map from vertex to its adjacency. Vertices without neighbors are
/// absent or map to an empty adjacency; neighbors() treats both the same.
class AdjMapGraph {
 public:
  using Map = std::unordered_map<vertex_t, Adjacency>;

  AdjMapGraph() = default;
  AdjMapGraph(vertex_t num_vertices, Map map);

  vertex_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_entries() const noexcept { return num_entries_; }
  const Map& map() const noexcept { return map_; }

  NeighborView neighbors(vertex_t u) const {
    auto it = map_.find(u);
    if (it == map_.end()) return {};
    return {it->second.ids, it->second.weights};
  }

  friend bool operator==(const AdjMapGraph& a, const AdjMapGraph& b);

 private:
  vertex_t num_vertices_ = 0;
  std::size_t num_entries_ = 0;
  Map map_;
};

/// Immutable undirected weighted graph. Every non-loop input edge is stored
/// in both directions; a self-loop is stored once. Kernels see it only
/// through neighbors().
class Graph {
 public:
  Graph(CsrGraph csr, std::size_t num_input_edges);
  Graph(AdjMapGraph adj, std::size_t num_input_edges);

  vertex_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_input_edges() const noexcept { return num_input_edges_; }
  std::size_t num_entries() const noexcept;
  Representation representation() const noexcept;

  /// Throws Error(Bounds) if u is outside [0, num_vertices).
  NeighborView neighbors(vertex_t u) const;
  std::size_t degree(vertex_t u) const { return neighbors(u).size(); }

  const CsrGraph* csr() const noexcept { return std::get_if<CsrGraph>(&storage_); }
  const AdjMapGraph* adjmap() const noexcept { return std::get_if<AdjMapGraph>(&storage_); }

  /// Same representation, vertex count, input edge count and storage.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  vertex_t num_vertices_;
  std::size_t num_input_edges_;
  std::variant<CsrGraph, AdjMapGraph> storage_;
};

/// Kernel 1. Builds with up to `workers` threads; the result does not depend
/// on `workers`. Throws Error(Validation) on an out-of-range endpoint and
/// Error(InvalidArgument) when workers is 0.
Graph build(const EdgeList& edges, Representation repr, std::size_t workers = 1);

CsrGraph build_csr(const EdgeList& edges, std::size_t workers = 1);
AdjMapGraph build_adjmap(const EdgeList& edges, std::size_t workers = 1);

/// One worker's slice of a sorted CSR entry array. row_ends[i] is the global
/// end offset of row first_row + i as seen from this slice alone.
struct CsrFragment {
  std::size_t entry_begin = 0;
  vertex_t first_row = 0;
  std::vector<std::size_t> row_ends;
  std::vector<vertex_t> col_indices;
  std::vector<double> weights;

  vertex_t last_row() const noexcept {
    return first_row + static_cast<vertex_t>(row_ends.size()) - 1;
  }
};

/// Stitches per-worker fragments (in entry order) into one CsrGraph. A row
/// claimed by two neighbouring fragments takes the larger end offset; rows no
/// fragment claims repeat the previous offset. Throws Error(Internal) if
/// fragments are not contiguous or overlap in more than a boundary row.
CsrGraph merge_boundary_rows(vertex_t num_vertices, std::span<const CsrFragment> fragments);

}  // namespace graphbench
