#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "graphbench/bfs.hpp"
#include "graphbench/edge_list.hpp"
#include "graphbench/sssp.hpp"

namespace graphbench {

inline constexpr double kDistanceTolerance = 1e-9;

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  bool passed = true;
  std::vector<ValidationCheck> checks;

  void add(ValidationCheck check);
  /// First failing check, or nullptr.
  const ValidationCheck* first_failure() const noexcept;
};

// Both validators read only the edge list and the result arrays, never the
// constructed graph, so a representation bug cannot hide itself.
//
// BFS checks:
//   root             level[root] == 0 and parent[root] == root
//   tree_edges       every (v, parent[v]) is an input edge in some direction
//   tree_levels      level[v] == -1 iff parent[v] == -1, and
//                    level[v] == level[parent[v]] + 1 for reached v != root
//   edge_level_span  |level[u] - level[v]| <= 1 on input edges between reached vertices
//   connectivity     no input edge joins a reached and an unreached vertex
//
// Levels strictly decrease along parent links, so these checks also rule out
// parent cycles.
ValidationReport validate_bfs(const EdgeList& edges, const BfsResult& result);

// SSSP checks:
//   source           dist[source] == 0 and prev[source] == -1
//   tree_edges       dist[v] == dist[prev[v]] + w (within 1e-9) for some input
//                    edge of weight w between them; prev[v] == -1 iff v is
//                    unreached or the source
//   edge_relaxation  dist[v] <= dist[u] + w + 1e-9 for every input edge, both directions
//   reachability     dist[v] is finite iff v is connected to the source
ValidationReport validate_sssp(const EdgeList& edges, const SsspResult& result);

/// Builds the edge index and connected components once so that many results
/// over the same edge list can be validated cheaply. validate_bfs and
/// validate_sssp are one-shot wrappers around it.
class EdgeListValidator {
 public:
  explicit EdgeListValidator(const EdgeList& edges);
  ~EdgeListValidator();
  EdgeListValidator(EdgeListValidator&&) noexcept;
  EdgeListValidator& operator=(EdgeListValidator&&) noexcept;

  ValidationReport bfs(const BfsResult& result) const;
  ValidationReport sssp(const SsspResult& result) const;

 private:
  struct Index;
  const EdgeList* edges_;
  std::unique_ptr<Index> index_;
};

/// One line per check: "PASS name" / "FAIL name: detail".
void print_report(std::ostream& out, const ValidationReport& report);
/// Header "check_name,pass,detail" then one row per check.
void write_report_csv(std::ostream& out, const ValidationReport& report);

}  // namespace graphbench
