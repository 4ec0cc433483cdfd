#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphbench/bfs.hpp"
#include "graphbench/graph.hpp"
#include "graphbench/kronecker.hpp"

namespace graphbench {

struct BenchConfig {
  /// Generator parameters or a path to an edge file.
  std::variant<GenParams, std::filesystem::path> graph = GenParams{};
  std::vector<Representation> representations{Representation::AdjacencyMap};
  /// Worker counts for Kernel 1 and parallel BFS. 1 is always added, since
  /// speedup is measured against it.
  std::vector<std::size_t> workers{1};
  std::size_t num_roots = 64;
  std::uint64_t root_seed = 2;
  /// Timed repetitions per measurement; the minimum is reported.
  std::size_t repetitions = 3;
  bool run_sssp = true;
  /// Empty: do not write a CSV.
  std::filesystem::path output;
};

struct BenchRow {
  std::string phase;  // kernel1, bfs_seq, bfs, sssp, speedup
  Representation repr = Representation::AdjacencyMap;
  std::size_t workers = 1;
  std::optional<vertex_t> root;
  double seconds = 0.0;  // for speedup rows: T(1) / T(workers)
  std::optional<double> teps;
};

/// Parallel BFS timings for one worker count, aggregated over roots.
struct WorkerSummary {
  Representation repr = Representation::AdjacencyMap;
  std::size_t workers = 1;
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
  double max_seconds = 0.0;
  double speedup = 1.0;
  double hmean_teps = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<WorkerSummary> bfs_summary;

  /// Throws Error(InvalidArgument) when the pair was not measured.
  const WorkerSummary& summary(Representation repr, std::size_t workers) const;
};

/// Number of input edges (each undirected edge once, duplicates and
/// self-loops included) inside the component the search reached.
std::size_t traversed_edges(const EdgeList& edges, const BfsResult& result);

/// n distinct vertices of non-zero degree, uniform and deterministic in seed.
/// When fewer than n exist, all of them are returned (shuffled) followed by
/// draws with replacement. Throws Error(Domain) if every vertex is isolated.
std::vector<vertex_t> sample_roots(const Graph& g, std::size_t n, std::uint64_t seed);

/// Times Kernel 1 per (representation, workers), then per sampled root:
/// sequential BFS, parallel BFS at every worker count, and SSSP. Every run is
/// validated before its time is kept; a failing check throws
/// Error(Integrity). Generation, file I/O and validation are not timed.
/// Progress lines go to `log` when given.
BenchReport run_bench(const BenchConfig& config, std::ostream* log = nullptr);
BenchReport run_bench(const EdgeList& edges, const BenchConfig& config,
                      std::ostream* log = nullptr);

/// Header "phase,repr,workers,root,seconds,teps"; root and teps may be empty.
void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace graphbench
