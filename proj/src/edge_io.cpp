#include "graphbench/edge_io.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "graphbench/error.hpp"
#include "graphbench/text_format.hpp"

namespace graphbench {

void write_edges(std::ostream& out, const EdgeList& edges) {
  out << edges.num_vertices << ' ' << edges.count() << ' ' << kEdgeFileVersion << '\n';
  for (std::size_t e = 0; e < edges.count(); ++e) {
    out << edges.sources[e] << ' ' << edges.targets[e] << ' ';
    text::put_double(out, edges.weights[e]);
    out << '\n';
  }
}

EdgeList read_edges(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!text::next_line(in, line, line_no)) {
    throw ParseError(1, "missing header");
  }
  auto header = text::split_fields(line);
  if (header.size() != 3) {
    throw ParseError(line_no, "header must be 'num_vertices num_edges version'");
  }
  EdgeList edges;
  edges.num_vertices = text::parse_int<vertex_t>(header[0], line_no, "vertex count");
  const auto declared = text::parse_int<std::size_t>(header[1], line_no, "edge count");
  const auto version = text::parse_int<int>(header[2], line_no, "format version");
  if (edges.num_vertices < 0) {
    throw ParseError(line_no, "negative vertex count");
  }
  if (version != kEdgeFileVersion) {
    throw ParseError(line_no, "unsupported format version " + std::to_string(version));
  }
  // Do not trust the header for a large up-front allocation.
  edges.reserve(std::min<std::size_t>(declared, std::size_t{1} << 24));

  while (text::next_line(in, line, line_no)) {
    auto f = text::split_fields(line);
    if (f.size() != 3) {
      throw ParseError(line_no, "expected 'u v w', got " + std::to_string(f.size()) + " fields");
    }
    const auto u = text::parse_int<vertex_t>(f[0], line_no, "source vertex");
    const auto v = text::parse_int<vertex_t>(f[1], line_no, "target vertex");
    const double w = text::parse_double(f[2], line_no, "weight");
    if (u < 0 || u >= edges.num_vertices || v < 0 || v >= edges.num_vertices) {
      throw Error(ErrorKind::Validation,
                  "line " + std::to_string(line_no) + ": endpoint out of range [0, " +
                      std::to_string(edges.num_vertices) + ")");
    }
    edges.push_back(u, v, w);
  }
  if (edges.count() != declared) {
    throw Error(ErrorKind::Validation,
                "header declares " + std::to_string(declared) + " edges, body has " +
                    std::to_string(edges.count()));
  }
  return edges;
}

void write_edge_file(const std::filesystem::path& path, const EdgeList& edges) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::File, "cannot open '" + path.string() + "' for writing");
  }
  write_edges(out, edges);
  out.flush();
  if (!out) {
    throw Error(ErrorKind::File, "write to '" + path.string() + "' failed");
  }
}

EdgeList read_edge_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::File, "cannot open '" + path.string() + "'");
  }
  return read_edges(in);
}

}  // namespace graphbench
