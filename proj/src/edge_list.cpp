#include "graphbench/edge_list.hpp"

#include <bit>
#include <string>

#include "graphbench/error.hpp"

namespace graphbench {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Capacity: return "capacity error";
    case ErrorKind::File: return "file error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Bounds: return "bounds error";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Integrity: return "benchmark integrity error";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

void EdgeList::check() const {
  if (targets.size() != sources.size() || weights.size() != sources.size()) {
    throw Error(ErrorKind::Validation, "edge list arrays differ in length");
  }
  if (num_vertices < 0) {
    throw Error(ErrorKind::Validation, "negative vertex count");
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const vertex_t u = sources[i];
    const vertex_t v = targets[i];
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw Error(ErrorKind::Validation,
                  "edge " + std::to_string(i) + " (" + std::to_string(u) + ", " +
                      std::to_string(v) + ") has an endpoint outside [0, " +
                      std::to_string(num_vertices) + ")");
    }
  }
}

bool operator==(const EdgeList& a, const EdgeList& b) noexcept {
  if (a.num_vertices != b.num_vertices || a.sources != b.sources ||
      a.targets != b.targets || a.weights.size() != b.weights.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.weights.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a.weights[i]) !=
        std::bit_cast<std::uint64_t>(b.weights[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace graphbench
