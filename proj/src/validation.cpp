#include "graphbench/validation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <tuple>

#include "graphbench/error.hpp"

namespace graphbench {

void ValidationReport::add(ValidationCheck check) {
  passed = passed && check.passed;
  checks.push_back(std::move(check));
}

const ValidationCheck* ValidationReport::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

// Transient sorted index of undirected input edges keyed by (min, max).
class EdgeIndex {
 public:
  struct Key {
    vertex_t lo;
    vertex_t hi;
    double weight;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  explicit EdgeIndex(const EdgeList& edges) {
    keys_.reserve(edges.count());
    for (std::size_t e = 0; e < edges.count(); ++e) {
      const vertex_t u = edges.sources[e];
      const vertex_t v = edges.targets[e];
      keys_.push_back({std::min(u, v), std::max(u, v), edges.weights[e]});
    }
    std::sort(keys_.begin(), keys_.end());
  }

  bool contains(vertex_t u, vertex_t v) const { return !weights(u, v).empty(); }

  std::span<const Key> weights(vertex_t u, vertex_t v) const {
    const Key probe{std::min(u, v), std::max(u, v), 0.0};
    auto first = std::lower_bound(keys_.begin(), keys_.end(), probe, less_pair);
    auto last = std::upper_bound(first, keys_.end(), probe, less_pair);
    return {first, last};
  }

 private:
  static bool less_pair(const Key& a, const Key& b) {
    return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
  }
  std::vector<Key> keys_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Accumulates failures of one check; keeps the first offending detail.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) : name_(std::move(name)) {}

  void fail(const std::string& detail) {
    if (failures_++ == 0) first_ = detail;
  }

  ValidationCheck finish() const {
    ValidationCheck c{name_, failures_ == 0, {}};
    if (failures_ > 0) {
      c.detail = first_;
      if (failures_ > 1) c.detail += " (+" + std::to_string(failures_ - 1) + " more)";
    }
    return c;
  }

 private:
  std::string name_;
  std::size_t failures_ = 0;
  std::string first_;
};

std::string vstr(std::size_t v) { return "vertex " + std::to_string(v); }

std::string num(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void check_sizes(std::size_t n, std::size_t a, std::size_t b, vertex_t root) {
  if (a != n || b != n) {
    throw Error(ErrorKind::Validation, "result arrays have " + std::to_string(a) + " and " +
                                           std::to_string(b) + " entries, graph has " +
                                           std::to_string(n) + " vertices");
  }
  if (root < 0 || static_cast<std::size_t>(root) >= n) {
    throw Error(ErrorKind::Validation, "result root " + std::to_string(root) + " out of range");
  }
}

}  // namespace

struct EdgeListValidator::Index {
  EdgeIndex edges;
  std::vector<std::size_t> component;
};

EdgeListValidator::EdgeListValidator(const EdgeList& edges) : edges_(&edges) {
  edges.check();
  const auto n = static_cast<std::size_t>(edges.num_vertices);
  DisjointSets sets(n);
  for (std::size_t e = 0; e < edges.count(); ++e) {
    sets.unite(static_cast<std::size_t>(edges.sources[e]),
               static_cast<std::size_t>(edges.targets[e]));
  }
  std::vector<std::size_t> component(n);
  for (std::size_t v = 0; v < n; ++v) component[v] = sets.find(v);
  index_ = std::make_unique<Index>(Index{EdgeIndex(edges), std::move(component)});
}

EdgeListValidator::~EdgeListValidator() = default;
EdgeListValidator::EdgeListValidator(EdgeListValidator&&) noexcept = default;
EdgeListValidator& EdgeListValidator::operator=(EdgeListValidator&&) noexcept = default;

ValidationReport validate_bfs(const EdgeList& edges, const BfsResult& result) {
  return EdgeListValidator(edges).bfs(result);
}

ValidationReport validate_sssp(const EdgeList& edges, const SsspResult& result) {
  return EdgeListValidator(edges).sssp(result);
}

ValidationReport EdgeListValidator::bfs(const BfsResult& result) const {
  const EdgeList& edges = *edges_;
  const auto n = static_cast<std::size_t>(edges.num_vertices);
  check_sizes(n, result.level.size(), result.parent.size(), result.root);
  const auto& level = result.level;
  const auto& parent = result.parent;
  const auto root = static_cast<std::size_t>(result.root);
  const EdgeIndex& index = index_->edges;
  auto reached = [&](std::size_t v) { return level[v] >= 0; };

  ValidationReport report;
  {
    CheckBuilder c("root");
    if (level[root] != 0) c.fail("root level is " + std::to_string(level[root]));
    if (parent[root] != result.root) c.fail("root parent is " + std::to_string(parent[root]));
    report.add(c.finish());
  }
  {
    CheckBuilder c("tree_edges");
    for (std::size_t v = 0; v < n; ++v) {
      if (v == root || parent[v] == kNoVertex) continue;
      const vertex_t p = parent[v];
      if (p < 0 || static_cast<std::size_t>(p) >= n) {
        c.fail(vstr(v) + " has out-of-range parent " + std::to_string(p));
      } else if (!index.contains(static_cast<vertex_t>(v), p)) {
        c.fail(vstr(v) + " parent " + std::to_string(p) + " is not adjacent");
      }
    }
    report.add(c.finish());
  }
  {
    CheckBuilder c("tree_levels");
    for (std::size_t v = 0; v < n; ++v) {
      if (level[v] < kUnreached) {
        c.fail(vstr(v) + " has invalid level " + std::to_string(level[v]));
        continue;
      }
      if (v == root) continue;
      const vertex_t p = parent[v];
      if ((level[v] == kUnreached) != (p == kNoVertex)) {
        c.fail(vstr(v) + " has level " + std::to_string(level[v]) + " but parent " +
               std::to_string(p));
        continue;
      }
      if (p == kNoVertex || p < 0 || static_cast<std::size_t>(p) >= n) continue;
      const std::int64_t pl = level[static_cast<std::size_t>(p)];
      if (pl < 0 || level[v] != pl + 1) {
        c.fail(vstr(v) + " level " + std::to_string(level[v]) + " but parent level " +
               std::to_string(pl));
      }
    }
    report.add(c.finish());
  }
  {
    CheckBuilder span_check("edge_level_span");
    CheckBuilder conn("connectivity");
    for (std::size_t e = 0; e < edges.count(); ++e) {
      const auto u = static_cast<std::size_t>(edges.sources[e]);
      const auto v = static_cast<std::size_t>(edges.targets[e]);
      if (reached(u) != reached(v)) {
        conn.fail("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") joins reached and unreached vertices");
      } else if (reached(u) && std::abs(level[u] - level[v]) > 1) {
        span_check.fail("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") spans levels " + std::to_string(level[u]) + " and " +
                        std::to_string(level[v]));
      }
    }
    report.add(span_check.finish());
    report.add(conn.finish());
  }
  return report;
}

ValidationReport EdgeListValidator::sssp(const SsspResult& result) const {
  const EdgeList& edges = *edges_;
  const auto n = static_cast<std::size_t>(edges.num_vertices);
  check_sizes(n, result.dist.size(), result.prev.size(), result.source);
  const auto& dist = result.dist;
  const auto& prev = result.prev;
  const auto source = static_cast<std::size_t>(result.source);
  const EdgeIndex& index = index_->edges;

  ValidationReport report;
  {
    CheckBuilder c("source");
    if (dist[source] != 0.0) c.fail("source distance is " + num(dist[source]));
    if (prev[source] != kNoVertex) c.fail("source predecessor is " + std::to_string(prev[source]));
    report.add(c.finish());
  }
  {
    CheckBuilder c("tree_edges");
    for (std::size_t v = 0; v < n; ++v) {
      if (v == source) continue;
      const vertex_t p = prev[v];
      const bool finite = std::isfinite(dist[v]);
      if (finite != (p != kNoVertex)) {
        c.fail(vstr(v) + " has distance " + num(dist[v]) + " but predecessor " +
               std::to_string(p));
        continue;
      }
      if (p == kNoVertex) continue;
      if (p < 0 || static_cast<std::size_t>(p) >= n) {
        c.fail(vstr(v) + " has out-of-range predecessor " + std::to_string(p));
        continue;
      }
      const double dp = dist[static_cast<std::size_t>(p)];
      const auto candidates = index.weights(static_cast<vertex_t>(v), p);
      const bool ok = std::isfinite(dp) &&
                      std::any_of(candidates.begin(), candidates.end(), [&](const auto& k) {
                        return std::abs(dist[v] - (dp + k.weight)) <= kDistanceTolerance;
                      });
      if (!ok) {
        c.fail(vstr(v) + " distance " + num(dist[v]) + " is not dist[" + std::to_string(p) +
               "] + w for any edge between them");
      }
    }
    report.add(c.finish());
  }
  {
    CheckBuilder c("edge_relaxation");
    auto check_dir = [&](std::size_t u, std::size_t v, double w) {
      if (std::isfinite(dist[u]) && !(dist[v] <= dist[u] + w + kDistanceTolerance)) {
        c.fail("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") relaxes " +
               vstr(v) + " from " + num(dist[v]) + " to " + num(dist[u] + w));
      }
    };
    for (std::size_t e = 0; e < edges.count(); ++e) {
      const auto u = static_cast<std::size_t>(edges.sources[e]);
      const auto v = static_cast<std::size_t>(edges.targets[e]);
      check_dir(u, v, edges.weights[e]);
      check_dir(v, u, edges.weights[e]);
    }
    report.add(c.finish());
  }
  {
    CheckBuilder c("reachability");
    const auto& component = index_->component;
    for (std::size_t v = 0; v < n; ++v) {
      const bool connected = component[v] == component[source];
      const double d = dist[v];
      if (std::isnan(d) || d < 0.0) {
        c.fail(vstr(v) + " has invalid distance " + num(d));
      } else if (connected != std::isfinite(d)) {
        c.fail(vstr(v) + (connected ? " is connected but has infinite distance"
                                    : " is disconnected but has finite distance"));
      }
    }
    report.add(c.finish());
  }
  return report;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

void print_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) out << ": " << c.detail;
    out << '\n';
  }
  out << "validation " << (report.passed ? "passed" : "FAILED") << '\n';
}

void write_report_csv(std::ostream& out, const ValidationReport& report) {
  out << "check_name,pass,detail\n";
  for (const auto& c : report.checks) {
    out << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ','
        << csv_field(c.detail) << '\n';
  }
}

}  // namespace graphbench
