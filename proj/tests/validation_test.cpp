#include "graphbench/validation.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "graphbench/error.hpp"
#include "graphbench/kronecker.hpp"
#include "graphbench/result_io.hpp"
#include "oracles.hpp"
#include "tamper.hpp"

namespace graphbench {
namespace {

EdgeList path4() {
  EdgeList e;
  e.num_vertices = 5;  // vertex 4 is isolated
  e.push_back(0, 1, 0.5);
  e.push_back(1, 2, 0.5);
  e.push_back(2, 3, 0.5);
  e.push_back(0, 3, 2.0);
  return e;
}

std::string failing_check(const ValidationReport& r) {
  const auto* f = r.first_failure();
  return f ? f->name : "";
}

TEST(ValidateBfsTest, AcceptsCorrectResult) {
  const EdgeList e = path4();
  const BfsResult r = bfs_sequential(build(e, Representation::Csr), 0);
  const ValidationReport report = validate_bfs(e, r);
  EXPECT_TRUE(report.passed);
  ASSERT_EQ(report.checks.size(), 5u);
  EXPECT_EQ(report.checks[0].name, "root");
}

TEST(ValidateBfsTest, NamesTheBrokenCheck) {
  const EdgeList e = path4();
  const BfsResult good = bfs_sequential(build(e, Representation::Csr), 0);
  // levels 0 1 2 1 -1, parents 0 0 1 0 -1

  BfsResult r = good;
  r.parent[0] = 1;
  EXPECT_EQ(failing_check(validate_bfs(e, r)), "root");

  r = good;
  r.parent[2] = 3;  // another valid tree parent
  EXPECT_TRUE(validate_bfs(e, r).passed);

  r = good;
  r.parent[3] = 2;
  r.level[3] = 3;
  EXPECT_EQ(failing_check(validate_bfs(e, r)), "edge_level_span");

  r = good;
  r.parent[2] = 0;
  EXPECT_EQ(failing_check(validate_bfs(e, r)), "tree_edges");

  r = good;
  r.level[2] = -1;
  r.parent[2] = -1;
  EXPECT_EQ(failing_check(validate_bfs(e, r)), "connectivity");
}

TEST(ValidateBfsTest, LengthMismatchOrBadRootThrows) {
  const EdgeList e = path4();
  BfsResult r = bfs_sequential(build(e, Representation::Csr), 0);
  r.level.pop_back();
  EXPECT_THROW(validate_bfs(e, r), Error);
  r = bfs_sequential(build(e, Representation::Csr), 0);
  r.root = 9;
  EXPECT_THROW(validate_bfs(e, r), Error);
}

TEST(ValidateSsspTest, AcceptsCorrectResultAndNamesBrokenCheck) {
  const EdgeList e = path4();
  const SsspResult good = sssp_dijkstra(build(e, Representation::Csr), 0);
  EXPECT_TRUE(validate_sssp(e, good).passed);

  SsspResult r = good;
  r.dist[0] = 0.1;
  EXPECT_EQ(failing_check(validate_sssp(e, r)), "source");

  r = good;
  r.dist[3] = 2.0;  // the direct edge, but 1.5 is shorter
  r.prev[3] = 0;
  EXPECT_EQ(failing_check(validate_sssp(e, r)), "edge_relaxation");

  r = good;
  r.dist[4] = 1.0;
  EXPECT_FALSE(validate_sssp(e, r).passed);

  r = good;
  r.dist[2] += 1e-12;  // inside tolerance
  EXPECT_TRUE(validate_sssp(e, r).passed);
}

TEST(ValidationTest, DetectsRandomTampers) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeList e = testing::random_edges(rng, 2 + static_cast<vertex_t>(rng() % 60), rng() % 150);
    const Graph g = build(e, Representation::AdjacencyMap);
    const auto root = static_cast<vertex_t>(rng() % static_cast<std::uint64_t>(e.num_vertices));
    const EdgeListValidator validator(e);

    BfsResult b = bfs_parallel(g, root, 2);
    ASSERT_TRUE(validator.bfs(b).passed);
    const auto bt = testing::tamper_bfs(rng, e, b);
    EXPECT_FALSE(validator.bfs(b).passed) << bt.what;

    SsspResult s = sssp_dijkstra(g, root);
    ASSERT_TRUE(validator.sssp(s).passed);
    const auto st = testing::tamper_sssp(rng, e, s, kDistanceTolerance);
    EXPECT_FALSE(validator.sssp(s).passed) << st.what;
  }
}

TEST(ValidationTest, ReportFormats) {
  ValidationReport report;
  report.add({"root", true, ""});
  report.add({"tree_edges", false, "vertex 3, parent 1"});
  EXPECT_FALSE(report.passed);
  std::ostringstream csv;
  write_report_csv(csv, report);
  EXPECT_EQ(csv.str(), "check_name,pass,detail\nroot,true,\ntree_edges,false,\"vertex 3, parent 1\"\n");
  std::ostringstream text;
  print_report(text, report);
  EXPECT_NE(text.str().find("PASS root"), std::string::npos);
  EXPECT_NE(text.str().find("FAIL tree_edges: vertex 3, parent 1"), std::string::npos);
}

TEST(ResultFileTest, RoundTrip) {
  const EdgeList e = path4();
  const Graph g = build(e, Representation::Csr);
  const BfsResult b = bfs_sequential(g, 1);
  const SsspResult s = sssp_dijkstra(g, 1);
  for (const KernelResult& r : {KernelResult(b), KernelResult(s)}) {
    std::stringstream io;
    std::visit([&](const auto& x) { write_result(io, x); }, r);
    EXPECT_EQ(read_result(io), r);
  }
  std::stringstream io;
  write_result(io, s);
  EXPECT_NE(io.str().find("inf -1"), std::string::npos);
}

TEST(ResultFileTest, RejectsMalformed) {
  auto kind = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_result(in);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind("dfs 0 1\n0 0\n"), ErrorKind::Parse);
  EXPECT_EQ(kind("bfs 0 2\n0 0\n"), ErrorKind::Validation);
  EXPECT_EQ(kind("bfs 0 1\n0 x\n"), ErrorKind::Parse);
}

}  // namespace
}  // namespace graphbench
