#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "graphbench/bench.hpp"
#include "graphbench/bfs.hpp"
#include "graphbench/edge_io.hpp"
#include "graphbench/error.hpp"
#include "graphbench/graph.hpp"
#include "graphbench/kronecker.hpp"
#include "graphbench/result_io.hpp"
#include "graphbench/sssp.hpp"
#include "graphbench/validation.hpp"

namespace graphbench::cli {
namespace {

constexpr const char* kExitCodes =
    "Exit status:\n"
    "  0  success\n"
    "  1  usage error (unknown flag, missing argument)\n"
    "  2  file error (missing or unwritable file)\n"
    "  3  malformed input file\n"
    "  4  validation failure\n"
    "  5  vertex out of range\n"
    "  6  invalid argument or precondition (e.g. negative weight)\n"
    "  7  graph too large for the edge-count representation\n"
    "  8  benchmark integrity error (a timed run failed validation)\n"
    "  9  internal error\n"
    "\n"
    "GRAPHBENCH_WORKERS sets the default for --workers.";

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::File: return kFileError;
    case ErrorKind::Parse: return kParseError;
    case ErrorKind::Validation: return kValidationFailed;
    case ErrorKind::Bounds: return kBoundsError;
    case ErrorKind::InvalidArgument:
    case ErrorKind::Domain: return kInvalidArgument;
    case ErrorKind::Capacity: return kCapacityError;
    case ErrorKind::Integrity: return kIntegrityError;
    case ErrorKind::Internal: return kInternalError;
  }
  return kInternalError;
}

template <typename Fn>
double timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_csv_file(const std::string& path, const ValidationReport& report) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorKind::File, "cannot open '" + path + "' for writing");
  write_report_csv(out, report);
}

int finish_validation(std::ostream& out, const ValidationReport& report, const std::string& csv) {
  print_report(out, report);
  write_csv_file(csv, report);
  return report.passed ? kOk : kValidationFailed;
}

struct Options {
  // generate
  GenParams gen;
  std::string out_path = kDefaultEdgeFile;
  // shared
  std::string in_path;
  std::string repr = "adjmap";
  std::size_t workers = 1;
  vertex_t root = 0;
  bool parallel = false;
  std::string save_path;
  std::string csv_path;
  bool linear_scan = false;
  // bench
  std::vector<std::size_t> sweep{1, 2, 4, 8};
  std::size_t num_roots = 64;
  std::uint64_t root_seed = 2;
  std::size_t reps = 3;
  bool no_sssp = false;
  std::string report_path = "report.csv";
  // validate
  std::string result_path;
};

int cmd_generate(const Options& o, std::ostream& out) {
  const EdgeList edges = generate(o.gen);
  write_edge_file(o.out_path, edges);
  out << "wrote " << o.out_path << ": " << edges.num_vertices << " vertices, " << edges.count()
      << " edges (scale " << o.gen.scale << ", edgefactor " << o.gen.edgefactor << ", seed "
      << o.gen.seed << ")\n";
  return kOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  const EdgeList edges = read_edge_file(o.in_path);
  const Representation repr = parse_representation(o.repr);
  std::optional<Graph> g;
  const double seconds = timed([&] { g.emplace(build(edges, repr, o.workers)); });
  std::size_t max_degree = 0;
  vertex_t isolated = 0;
  for (vertex_t v = 0; v < g->num_vertices(); ++v) {
    const std::size_t d = g->degree(v);
    max_degree = std::max(max_degree, d);
    if (d == 0) ++isolated;
  }
  out << "representation " << to_string(repr) << ", workers " << o.workers << "\n"
      << "vertices " << g->num_vertices() << ", input edges " << g->num_input_edges()
      << ", adjacency entries " << g->num_entries() << "\n"
      << "max degree " << max_degree << ", isolated vertices " << isolated << "\n"
      << "kernel1 time " << seconds << " s\n";
  return kOk;
}

int cmd_bfs(const Options& o, std::ostream& out) {
  const EdgeList edges = read_edge_file(o.in_path);
  const Graph g = build(edges, parse_representation(o.repr), o.workers);
  BfsResult r;
  const double seconds = timed([&] {
    r = o.parallel ? bfs_parallel(g, o.root, o.workers) : bfs_sequential(g, o.root);
  });
  const auto max_level = *std::max_element(r.level.begin(), r.level.end());
  const std::size_t traversed = traversed_edges(edges, r);
  out << "bfs root " << r.root << (o.parallel ? " (parallel, " : " (sequential, ")
      << (o.parallel ? o.workers : 1) << " workers)\n"
      << "reached " << r.reached() << " of " << g.num_vertices() << " vertices, depth "
      << max_level << "\n"
      << "kernel2 time " << seconds << " s, traversed edges " << traversed << ", TEPS "
      << static_cast<double>(traversed) / std::max(seconds, 1e-9) << "\n";
  if (!o.save_path.empty()) write_result_file(o.save_path, r);
  return finish_validation(out, validate_bfs(edges, r), o.csv_path);
}

int cmd_sssp(const Options& o, std::ostream& out) {
  const EdgeList edges = read_edge_file(o.in_path);
  const Graph g = build(edges, parse_representation(o.repr), o.workers);
  SsspResult r;
  const double seconds = timed([&] {
    r = sssp_dijkstra(g, o.root, o.linear_scan ? SsspQueue::LinearScan : SsspQueue::BinaryHeap);
  });
  std::size_t reached = 0;
  double max_dist = 0.0;
  for (double d : r.dist) {
    if (d != kUnreachable) {
      ++reached;
      max_dist = std::max(max_dist, d);
    }
  }
  out << "sssp source " << r.source << "\n"
      << "reached " << reached << " of " << g.num_vertices() << " vertices, max distance "
      << max_dist << "\n"
      << "kernel3 time " << seconds << " s\n";
  if (!o.save_path.empty()) write_result_file(o.save_path, r);
  return finish_validation(out, validate_sssp(edges, r), o.csv_path);
}

int cmd_bench(const Options& o, std::ostream& out) {
  BenchConfig config;
  if (!o.in_path.empty()) {
    config.graph = std::filesystem::path(o.in_path);
  } else {
    config.graph = o.gen;
  }
  if (o.repr == "both") {
    config.representations = {Representation::AdjacencyMap, Representation::Csr};
  } else {
    config.representations = {parse_representation(o.repr)};
  }
  config.workers = o.sweep;
  config.num_roots = o.num_roots;
  config.root_seed = o.root_seed;
  config.repetitions = o.reps;
  config.run_sssp = !o.no_sssp;
  config.output = o.report_path;
  const BenchReport report = run_bench(config, &out);
  out << "workers,repr,mean_s,min_s,max_s,speedup,hmean_teps\n";
  for (const auto& s : report.bfs_summary) {
    out << s.workers << ',' << to_string(s.repr) << ',' << s.mean_seconds << ','
        << s.min_seconds << ',' << s.max_seconds << ',' << s.speedup << ',' << s.hmean_teps
        << '\n';
  }
  out << "wrote " << o.report_path << "\n";
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const EdgeList edges = read_edge_file(o.in_path);
  const KernelResult result = read_result_file(o.result_path);
  const ValidationReport report = std::visit(
      [&](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, BfsResult>) {
          out << "bfs result, root " << r.root << "\n";
          return validate_bfs(edges, r);
        } else {
          out << "sssp result, source " << r.source << "\n";
          return validate_sssp(edges, r);
        }
      },
      result);
  return finish_validation(out, report, o.csv_path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph500-style benchmark: Kronecker generation, graph construction, BFS, SSSP"};
  app.footer(kExitCodes);
  app.require_subcommand(1, 1);
  Options o;

  auto add_repr = [&](CLI::App* cmd) {
    cmd->add_option("--repr", o.repr, "Graph representation: adjmap or csr")
        ->check(CLI::IsMember({"adjmap", "csr"}))
        ->capture_default_str();
  };
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", o.workers, "Worker threads")
        ->envname("GRAPHBENCH_WORKERS")
        ->capture_default_str();  // 0 is rejected by the kernels, not here
  };
  auto add_gen = [&](CLI::App* cmd, bool required) {
    auto* s = cmd->add_option("--scale", o.gen.scale, "log2 of the vertex count");
    auto* e = cmd->add_option("--edgefactor", o.gen.edgefactor, "Edges per vertex");
    if (required) {
      s->required();
      e->required();
    }
    cmd->add_option("--seed", o.gen.seed, "Generator seed")->capture_default_str();
    cmd->add_option("--a", o.gen.initiator.a, "Initiator probability a")->capture_default_str();
    cmd->add_option("--b", o.gen.initiator.b, "Initiator probability b")->capture_default_str();
    cmd->add_option("--c", o.gen.initiator.c, "Initiator probability c")->capture_default_str();
    cmd->add_option("--d", o.gen.initiator.d, "Initiator probability d")->capture_default_str();
  };

  auto* generate_cmd = app.add_subcommand("generate", "Generate a Kronecker edge file");
  add_gen(generate_cmd, true);
  generate_cmd->add_option("--out", o.out_path, "Output edge file")->capture_default_str();

  auto* build_cmd = app.add_subcommand("build", "Construct the graph (Kernel 1) and report stats");
  build_cmd->add_option("--in", o.in_path, "Edge file")->required();
  add_repr(build_cmd);
  add_workers(build_cmd);

  auto* bfs_cmd = app.add_subcommand("bfs", "Breadth-first search (Kernel 2)");
  bfs_cmd->add_option("--in", o.in_path, "Edge file")->required();
  bfs_cmd->add_option("--root", o.root, "Start vertex")->required();
  add_repr(bfs_cmd);
  add_workers(bfs_cmd);
  bfs_cmd->add_flag("--parallel", o.parallel, "Use level-synchronous parallel BFS");
  bfs_cmd->add_option("--save", o.save_path, "Save the level/parent arrays");
  bfs_cmd->add_option("--csv", o.csv_path, "Write the validation report as CSV");

  auto* sssp_cmd = app.add_subcommand("sssp", "Single-source shortest paths (Kernel 3)");
  sssp_cmd->add_option("--in", o.in_path, "Edge file")->required();
  sssp_cmd->add_option("--source", o.root, "Source vertex")->required();
  add_repr(sssp_cmd);
  sssp_cmd->add_flag("--linear-scan", o.linear_scan, "Use O(V^2) minimum extraction");
  sssp_cmd->add_option("--save", o.save_path, "Save the dist/prev arrays");
  sssp_cmd->add_option("--csv", o.csv_path, "Write the validation report as CSV");

  auto* bench_cmd = app.add_subcommand("bench", "Time kernels over sampled roots and worker counts");
  auto* bench_in = bench_cmd->add_option("--in", o.in_path, "Edge file");
  add_gen(bench_cmd, false);
  bench_cmd->get_option("--scale")->excludes(bench_in);
  bench_cmd->add_option("--workers", o.sweep, "Comma-separated worker counts")
      ->delimiter(',')
      ->envname("GRAPHBENCH_WORKERS")
      ->capture_default_str();
  bench_cmd->add_option("--roots", o.num_roots, "Number of start vertices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--root-seed", o.root_seed, "Root sampling seed")->capture_default_str();
  bench_cmd->add_option("--reps", o.reps, "Timed repetitions (minimum kept)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--repr", o.repr, "adjmap, csr or both")
      ->check(CLI::IsMember({"adjmap", "csr", "both"}))
      ->capture_default_str();
  bench_cmd->add_flag("--no-sssp", o.no_sssp, "Skip Kernel 3");
  bench_cmd->add_option("--out", o.report_path, "CSV report path")->capture_default_str();

  auto* validate_cmd = app.add_subcommand("validate", "Re-validate a saved bfs/sssp result");
  validate_cmd->add_option("--in", o.in_path, "Edge file")->required();
  validate_cmd->add_option("--result", o.result_path, "Saved result file")->required();
  validate_cmd->add_option("--csv", o.csv_path, "Write the validation report as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(o, out);
    if (build_cmd->parsed()) return cmd_build(o, out);
    if (bfs_cmd->parsed()) return cmd_bfs(o, out);
    if (sssp_cmd->parsed()) return cmd_sssp(o, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
  } catch (const Error& e) {
    err << "graphbench: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "graphbench: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsage;
}

}  // namespace graphbench::cli
