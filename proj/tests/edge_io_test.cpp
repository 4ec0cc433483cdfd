#include "graphbench/edge_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "graphbench/error.hpp"
#include "graphbench/kronecker.hpp"
#include "oracles.hpp"

namespace graphbench {
namespace {

std::string to_text(const EdgeList& e) {
  std::ostringstream out;
  write_edges(out, e);
  return out.str();
}

EdgeList from_text(const std::string& s) {
  std::istringstream in(s);
  return read_edges(in);
}

ErrorKind read_error(const std::string& s) {
  try {
    from_text(s);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

TEST(EdgeFileTest, WritesHeaderAndOneLinePerEdge) {
  EdgeList e;
  e.num_vertices = 2;
  e.push_back(0, 1, 0.5);
  EXPECT_EQ(to_text(e), "2 1 1\n0 1 0.5\n");
}

TEST(EdgeFileTest, EmptyListIsHeaderOnly) {
  EdgeList e;
  e.num_vertices = 4;
  EXPECT_EQ(to_text(e), "4 0 1\n");
  EXPECT_EQ(from_text("4 0 1\n"), e);
}

TEST(EdgeFileTest, ReadsExample) {
  const EdgeList e = from_text("2 1 1\n0 1 0.5\n");
  EXPECT_EQ(e.num_vertices, 2);
  ASSERT_EQ(e.count(), 1u);
  EXPECT_EQ(e.sources[0], 0);
  EXPECT_EQ(e.targets[0], 1);
  EXPECT_EQ(e.weights[0], 0.5);
}

TEST(EdgeFileTest, AcceptsTabsAndCrLf) {
  const EdgeList e = from_text("2 1 1\r\n0\t1  0.25\r\n");
  EXPECT_EQ(e.weights[0], 0.25);
}

TEST(EdgeFileTest, RejectsEndpointOutOfRange) {
  EXPECT_EQ(read_error("2 1 1\n0 5 0.5\n"), ErrorKind::Validation);
  EXPECT_EQ(read_error("2 1 1\n-1 0 0.5\n"), ErrorKind::Validation);
}

TEST(EdgeFileTest, RejectsCountMismatch) {
  EXPECT_EQ(read_error("2 2 1\n0 1 0.5\n"), ErrorKind::Validation);
  EXPECT_EQ(read_error("2 0 1\n0 1 0.5\n"), ErrorKind::Validation);
}

TEST(EdgeFileTest, MalformedLineReportsLineNumber) {
  try {
    from_text("3 2 1\n0 1 0.5\n1 x 0.5\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
  EXPECT_EQ(read_error(""), ErrorKind::Parse);
  EXPECT_EQ(read_error("2 1\n"), ErrorKind::Parse);
  EXPECT_EQ(read_error("2 1 2\n0 1 0.5\n"), ErrorKind::Parse);    // version
  EXPECT_EQ(read_error("2 1 1\n0 1\n"), ErrorKind::Parse);        // missing weight
  EXPECT_EQ(read_error("2 1 1\n0 1 0.5 # c\n"), ErrorKind::Parse);  // no comments
  EXPECT_EQ(read_error("2 1 1\n\n"), ErrorKind::Parse);           // blank line
  EXPECT_EQ(read_error("2 1 1\n0 1 nan\n"), ErrorKind::Parse);
  EXPECT_EQ(read_error("2 1 1\n0 1 0.5x\n"), ErrorKind::Parse);
}

TEST(EdgeFileTest, MissingFileIsFileError) {
  try {
    read_edge_file("/nonexistent/dir/kronecker.txt");
    FAIL() << "expected a file error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::File);
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/kronecker.txt"), std::string::npos);
  }
  EdgeList e;
  EXPECT_THROW(write_edge_file("/nonexistent/dir/out.txt", e), Error);
}

TEST(EdgeFileTest, RoundTripPreservesOrderLoopsAndDuplicates) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    EdgeList e = testing::random_edges(rng, 1 + static_cast<vertex_t>(rng() % 50), rng() % 200);
    // awkward but legal weights
    if (e.count() > 3) {
      e.weights[0] = std::numeric_limits<double>::denorm_min();
      e.weights[1] = 0.1 + 0.2;
      e.weights[2] = std::nextafter(1.0, 0.0);
    }
    EXPECT_EQ(from_text(to_text(e)), e);
  }
}

TEST(EdgeFileTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "graphbench_edge_io_test.txt";
  const EdgeList e = generate({.scale = 6, .edgefactor = 8, .seed = 9});
  write_edge_file(path, e);
  EXPECT_EQ(read_edge_file(path), e);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace graphbench
