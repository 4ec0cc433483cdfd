#include "graphbench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "graphbench/edge_io.hpp"
#include "graphbench/error.hpp"
#include "graphbench/random.hpp"
#include "graphbench/sssp.hpp"
#include "graphbench/text_format.hpp"
#include "graphbench/validation.hpp"

namespace graphbench {

const WorkerSummary& BenchReport::summary(Representation repr, std::size_t workers) const {
  for (const auto& s : bfs_summary) {
    if (s.repr == repr && s.workers == workers) return s;
  }
  throw Error(ErrorKind::InvalidArgument, "no summary for " + std::string(to_string(repr)) +
                                              " at " + std::to_string(workers) + " workers");
}

std::size_t traversed_edges(const EdgeList& edges, const BfsResult& result) {
  std::size_t count = 0;
  for (std::size_t e = 0; e < edges.count(); ++e) {
    if (result.level[static_cast<std::size_t>(edges.sources[e])] != kUnreached) ++count;
  }
  return count;
}

std::vector<vertex_t> sample_roots(const Graph& g, std::size_t n, std::uint64_t seed) {
  std::vector<vertex_t> candidates;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) candidates.push_back(v);
  }
  if (candidates.empty()) {
    throw Error(ErrorKind::Domain, "graph has no non-isolated vertex to use as a root");
  }
  SplitMix64 rng(seed);
  const std::size_t take = std::min(n, candidates.size());
  for (std::size_t i = 0; i < take; ++i) {
    std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
  }
  std::vector<vertex_t> roots(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take));
  while (roots.size() < n) roots.push_back(candidates[rng.below(candidates.size())]);
  return roots;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_seconds(Fn&& fn) {
  const auto start = Clock::now();
  fn();
  // floor at one clock tick so TEPS stays finite on trivial inputs
  return std::max(std::chrono::duration<double>(Clock::now() - start).count(), 1e-9);
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (const auto* failure = report.first_failure()) {
    throw Error(ErrorKind::Integrity,
                what + ": check " + failure->name + " failed: " + failure->detail);
  }
}

std::string describe(const char* kernel, Representation repr, std::size_t workers, vertex_t root) {
  return std::string(kernel) + " (" + std::string(to_string(repr)) + ", " +
         std::to_string(workers) + " workers, root " + std::to_string(root) + ")";
}

}  // namespace

BenchReport run_bench(const BenchConfig& config, std::ostream* log) {
  EdgeList edges;
  if (const auto* params = std::get_if<GenParams>(&config.graph)) {
    edges = generate(*params);
  } else {
    edges = read_edge_file(std::get<std::filesystem::path>(config.graph));
  }
  return run_bench(edges, config, log);
}

BenchReport run_bench(const EdgeList& edges, const BenchConfig& config, std::ostream* log) {
  if (config.num_roots == 0) throw Error(ErrorKind::InvalidArgument, "num_roots must be >= 1");
  if (config.repetitions == 0) throw Error(ErrorKind::InvalidArgument, "repetitions must be >= 1");
  if (config.representations.empty()) {
    throw Error(ErrorKind::InvalidArgument, "no representation selected");
  }
  std::vector<std::size_t> sweep = config.workers;
  sweep.push_back(1);
  std::sort(sweep.begin(), sweep.end());
  sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());
  if (sweep.front() == 0) throw Error(ErrorKind::InvalidArgument, "worker counts must be >= 1");

  const EdgeListValidator validator(edges);
  BenchReport report;

  for (const Representation repr : config.representations) {
    std::optional<Graph> graph;
    for (const std::size_t w : sweep) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        std::optional<Graph> built;
        best = std::min(best, time_seconds([&] { built.emplace(build(edges, repr, w)); }));
        if (!graph) graph = std::move(built);
      }
      report.rows.push_back({"kernel1", repr, w, std::nullopt, best, std::nullopt});
      if (log) *log << "kernel1 " << to_string(repr) << " workers=" << w << " " << best << "s\n";
    }
    const Graph& g = *graph;
    const auto roots = sample_roots(g, config.num_roots, config.root_seed);

    std::vector<std::size_t> traversed(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        BfsResult r;
        const double t = time_seconds([&] { r = bfs_sequential(g, roots[i]); });
        require_valid(validator.bfs(r), describe("bfs_sequential", repr, 1, roots[i]));
        traversed[i] = traversed_edges(edges, r);
        best = std::min(best, t);
      }
      report.rows.push_back({"bfs_seq", repr, 1, roots[i], best,
                             static_cast<double>(traversed[i]) / best});
    }

    for (const std::size_t w : sweep) {
      (void)bfs_parallel(g, roots.front(), w);  // warm-up, untimed
      std::vector<double> times;
      double inv_teps = 0.0;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
          BfsResult r;
          const double t = time_seconds([&] { r = bfs_parallel(g, roots[i], w); });
          require_valid(validator.bfs(r), describe("bfs_parallel", repr, w, roots[i]));
          best = std::min(best, t);
        }
        const double teps = static_cast<double>(traversed[i]) / best;
        report.rows.push_back({"bfs", repr, w, roots[i], best, teps});
        times.push_back(best);
        inv_teps += 1.0 / teps;
      }
      WorkerSummary s;
      s.repr = repr;
      s.workers = w;
      s.mean_seconds = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
      s.min_seconds = *std::min_element(times.begin(), times.end());
      s.max_seconds = *std::max_element(times.begin(), times.end());
      s.hmean_teps = static_cast<double>(times.size()) / inv_teps;
      report.bfs_summary.push_back(s);
      if (log) {
        *log << "bfs " << to_string(repr) << " workers=" << w << " mean " << s.mean_seconds
             << "s hmean TEPS " << s.hmean_teps << "\n";
      }
    }
    const double base = report.summary(repr, 1).mean_seconds;
    for (auto& s : report.bfs_summary) {
      if (s.repr == repr) s.speedup = s.workers == 1 ? 1.0 : base / s.mean_seconds;
    }

    if (config.run_sssp) {
      for (std::size_t i = 0; i < roots.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
          SsspResult r;
          const double t = time_seconds([&] { r = sssp_dijkstra(g, roots[i]); });
          require_valid(validator.sssp(r), describe("sssp_dijkstra", repr, 1, roots[i]));
          best = std::min(best, t);
        }
        report.rows.push_back({"sssp", repr, 1, roots[i], best,
                               static_cast<double>(traversed[i]) / best});
      }
    }

    for (const auto& s : report.bfs_summary) {
      if (s.repr == repr) {
        report.rows.push_back({"speedup", repr, s.workers, std::nullopt, s.speedup, s.hmean_teps});
      }
    }
  }

  if (!config.output.empty()) {
    std::ofstream out(config.output, std::ios::trunc);
    if (!out) throw Error(ErrorKind::File, "cannot open '" + config.output.string() + "' for writing");
    write_bench_csv(out, report);
    if (!out.flush()) throw Error(ErrorKind::File, "write to '" + config.output.string() + "' failed");
  }
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "phase,repr,workers,root,seconds,teps\n";
  for (const auto& row : report.rows) {
    out << row.phase << ',' << to_string(row.repr) << ',' << row.workers << ',';
    if (row.root) out << *row.root;
    out << ',';
    text::put_double(out, row.seconds);
    out << ',';
    if (row.teps) text::put_double(out, *row.teps);
    out << '\n';
  }
}

}  // namespace graphbench
