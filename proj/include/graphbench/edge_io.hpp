#pragma once

#include <filesystem>
#include <iosfwd>

#include "graphbench/edge_list.hpp"

namespace graphbench {

inline constexpr int kEdgeFileVersion = 1;
inline constexpr const char* kDefaultEdgeFile = "kronecker.txt";

// Edge file layout, one record per line, whitespace separated:
//
//   <num_vertices> <num_edges> <version>
//   <u> <v> <w>            (num_edges times, in edge-list order)
//
// Weights are written in the shortest form that parses back to the same
// double. No comments or blank lines.

void write_edges(std::ostream& out, const EdgeList& edges);
EdgeList read_edges(std::istream& in);

/// Throws Error(File) naming the path when it cannot be opened or written.
void write_edge_file(const std::filesystem::path& path, const EdgeList& edges);

/// Throws ParseError (with line number) on malformed lines and
/// Error(Validation) on out-of-range endpoints or a header/body count
/// mismatch.
EdgeList read_edge_file(const std::filesystem::path& path);

}  // namespace graphbench
