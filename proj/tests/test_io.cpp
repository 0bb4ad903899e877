#include "hosoya/graph_io.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

using namespace hosoya;

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(complete(4)), "C~");
  EXPECT_EQ(to_graph6(caterpillar({1, 1, 1, 1})), "Ch");  // path 0-1-2-3
  EXPECT_EQ(to_graph6(Graph(2, {{0, 1}})), "A_");
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    const std::size_t max_m = static_cast<std::size_t>(n) * (n - 1) / 2;
    Graph g = oracle::random_connected(rng, n, std::uniform_int_distribution<std::size_t>(n - 1, max_m)(rng));
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, LongHeader) {
  Graph g = caterpillar({70});
  const std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(from_graph6(s), g);
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_graph6(""), std::invalid_argument);
  EXPECT_THROW(from_graph6("C"), std::invalid_argument);     // missing body
  EXPECT_THROW(from_graph6("C~~"), std::invalid_argument);   // trailing byte
  EXPECT_THROW(from_graph6("C\x01"), std::invalid_argument); // below '?'
}

TEST(EdgeList, RoundTrip) {
  Graph g = q_graph(3, {2, 1, 3});
  std::istringstream in(to_edge_list(g));
  EXPECT_EQ(read_edge_list(in), g);
}

TEST(EdgeList, ParsesFileWithArbitraryWhitespace) {
  const std::string path = ::testing::TempDir() + "edge_list_test.txt";
  {
    std::ofstream out(path);
    out << "n 4\n0 1\n  1 2\n2 3   \n0 3\n";
  }
  Graph g = read_edge_list_file(path);
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4u);
  std::remove(path.c_str());
  EXPECT_THROW(read_edge_list_file(path), std::runtime_error);
}

TEST(EdgeList, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  EXPECT_THROW(parse("4\n0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse("n 3\n0 1\n2\n"), std::invalid_argument);
  EXPECT_THROW(parse("n 3\n0 3\n"), std::invalid_argument);
  EXPECT_THROW(parse("n 3\n0 x\n"), std::invalid_argument);
  EXPECT_THROW(parse("n 3\n0 1\n1 0\n"), std::invalid_argument);
}
