#include "graphbench/kronecker.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "graphbench/error.hpp"
#include "graphbench/random.hpp"

namespace graphbench {

void GenParams::check() const {
  if (scale < 1) {
    throw Error(ErrorKind::InvalidArgument, "scale must be >= 1");
  }
  if (edgefactor < 1) {
    throw Error(ErrorKind::InvalidArgument, "edgefactor must be >= 1");
  }
  const double p[] = {initiator.a, initiator.b, initiator.c, initiator.d};
  for (double x : p) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error(ErrorKind::InvalidArgument,
                  "initiator probabilities must lie in [0, 1]");
    }
  }
  if (std::abs(p[0] + p[1] + p[2] + p[3] - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument,
                "initiator probabilities must sum to 1");
  }
}

GenStreams GenStreams::from_seed(std::uint64_t seed) noexcept {
  SplitMix64 root(seed);
  GenStreams s;
  s.quadrant = root.next();
  s.weight = root.next();
  s.permutation = root.next();
  s.shuffle = root.next();
  return s;
}

EdgeList generate(const GenParams& params) {
  return generate(params, GenStreams::from_seed(params.seed));
}

EdgeList generate(const GenParams& params, const GenStreams& streams) {
  params.check();

  constexpr auto kMax = std::numeric_limits<vertex_t>::max();
  if (params.scale >= std::numeric_limits<vertex_t>::digits ||
      (kMax >> params.scale) < params.edgefactor) {
    throw Error(ErrorKind::Capacity,
                "scale " + std::to_string(params.scale) + " with edgefactor " +
                    std::to_string(params.edgefactor) +
                    " overflows the edge count");
  }
  const vertex_t n = vertex_t{1} << params.scale;
  const vertex_t m = n * params.edgefactor;

  EdgeList edges;
  edges.num_vertices = n;
  edges.sources.assign(static_cast<std::size_t>(m), 0);
  edges.targets.assign(static_cast<std::size_t>(m), 0);
  edges.weights.assign(static_cast<std::size_t>(m), 0.0);

  const double ab = params.initiator.a + params.initiator.b;
  const double abc = ab + params.initiator.c;
  const double a = params.initiator.a;

  SplitMix64 quad(streams.quadrant);
  for (std::size_t e = 0; e < edges.count(); ++e) {
    vertex_t u = 0;
    vertex_t v = 0;
    for (int bit = 0; bit < params.scale; ++bit) {
      const double r = quad.uniform01();
      // quadrants: a = (0,0), b = (0,1), c = (1,0), d = (1,1)
      const vertex_t row = r >= ab ? 1 : 0;
      const vertex_t col = (r >= a && r < ab) || r >= abc ? 1 : 0;
      u |= row << bit;
      v |= col << bit;
    }
    edges.sources[e] = u;
    edges.targets[e] = v;
  }

  SplitMix64 wgen(streams.weight);
  for (double& w : edges.weights) w = wgen.uniform01();

  std::vector<vertex_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), vertex_t{0});
  SplitMix64 pgen(streams.permutation);
  for (std::size_t i = perm.size() - 1; i > 0; --i) {
    std::swap(perm[i], perm[pgen.below(i + 1)]);
  }
  for (std::size_t e = 0; e < edges.count(); ++e) {
    edges.sources[e] = perm[static_cast<std::size_t>(edges.sources[e])];
    edges.targets[e] = perm[static_cast<std::size_t>(edges.targets[e])];
  }

  SplitMix64 sgen(streams.shuffle);
  for (std::size_t i = edges.count() - 1; i > 0; --i) {
    const std::size_t j = sgen.below(i + 1);
    std::swap(edges.sources[i], edges.sources[j]);
    std::swap(edges.targets[i], edges.targets[j]);
    std::swap(edges.weights[i], edges.weights[j]);
  }
  return edges;
}

std::map<std::int64_t, std::int64_t> degree_histogram(const EdgeList& edges) {
  edges.check();
  std::vector<std::int64_t> degree(static_cast<std::size_t>(edges.num_vertices), 0);
  for (std::size_t e = 0; e < edges.count(); ++e) {
    ++degree[static_cast<std::size_t>(edges.sources[e])];
    ++degree[static_cast<std::size_t>(edges.targets[e])];
  }
  std::map<std::int64_t, std::int64_t> hist;
  for (std::int64_t d : degree) ++hist[d];
  return hist;
}

}  // namespace graphbench
