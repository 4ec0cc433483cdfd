#include "graphbench/result_io.hpp"

#include <fstream>
#include <string>

#include "graphbench/error.hpp"
#include "graphbench/text_format.hpp"

namespace graphbench {

void write_result(std::ostream& out, const BfsResult& result) {
  out << "bfs " << result.root << ' ' << result.level.size() << '\n';
  for (std::size_t v = 0; v < result.level.size(); ++v) {
    out << result.level[v] << ' ' << result.parent[v] << '\n';
  }
}

void write_result(std::ostream& out, const SsspResult& result) {
  out << "sssp " << result.source << ' ' << result.dist.size() << '\n';
  for (std::size_t v = 0; v < result.dist.size(); ++v) {
    text::put_double(out, result.dist[v]);
    out << ' ' << result.prev[v] << '\n';
  }
}

KernelResult read_result(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!text::next_line(in, line, line_no)) throw ParseError(1, "missing header");
  const auto header = text::split_fields(line);
  if (header.size() != 3 || (header[0] != "bfs" && header[0] != "sssp")) {
    throw ParseError(line_no, "header must be 'bfs|sssp root N'");
  }
  const bool is_bfs = header[0] == "bfs";
  const auto root = text::parse_int<vertex_t>(header[1], line_no, "root");
  const auto n = text::parse_int<std::size_t>(header[2], line_no, "vertex count");

  BfsResult bfs;
  SsspResult sssp;
  bfs.root = root;
  sssp.source = root;
  while (text::next_line(in, line, line_no)) {
    const auto f = text::split_fields(line);
    if (f.size() != 2) throw ParseError(line_no, "expected two fields");
    if (is_bfs) {
      bfs.level.push_back(text::parse_int<std::int64_t>(f[0], line_no, "level"));
      bfs.parent.push_back(text::parse_int<vertex_t>(f[1], line_no, "parent"));
    } else {
      sssp.dist.push_back(text::parse_double(f[0], line_no, "distance", true));
      sssp.prev.push_back(text::parse_int<vertex_t>(f[1], line_no, "predecessor"));
    }
  }
  const std::size_t got = is_bfs ? bfs.level.size() : sssp.dist.size();
  if (got != n) {
    throw Error(ErrorKind::Validation, "header declares " + std::to_string(n) +
                                           " vertices, body has " + std::to_string(got));
  }
  if (is_bfs) return bfs;
  return sssp;
}

void write_result_file(const std::filesystem::path& path, const KernelResult& result) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::File, "cannot open '" + path.string() + "' for writing");
  std::visit([&](const auto& r) { write_result(out, r); }, result);
  out.flush();
  if (!out) throw Error(ErrorKind::File, "write to '" + path.string() + "' failed");
}

KernelResult read_result_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::File, "cannot open '" + path.string() + "'");
  return read_result(in);
}

}  // namespace graphbench
