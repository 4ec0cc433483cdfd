#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "graphbench/bfs.hpp"
#include "graphbench/sssp.hpp"

namespace graphbench {

// Saved kernel output:
//
//   bfs <root> <N>           sssp <source> <N>
//   <level> <parent>         <dist> <prev>        (N lines, vertex order)
//
// Unreachable distances are written as "inf".

using KernelResult = std::variant<BfsResult, SsspResult>;

void write_result(std::ostream& out, const BfsResult& result);
void write_result(std::ostream& out, const SsspResult& result);
KernelResult read_result(std::istream& in);

void write_result_file(const std::filesystem::path& path, const KernelResult& result);
KernelResult read_result_file(const std::filesystem::path& path);

}  // namespace graphbench
