#include "hosoya/graph.hpp"

#include <gtest/gtest.h>

using namespace hosoya;

TEST(Graph, EdgesAreNormalizedAndSorted) {
  Graph g(4, {{3, 1}, {0, 2}, {2, 1}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(0, 3));
}

TEST(Graph, RejectsLoopsDuplicatesAndBadVertices) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::out_of_range);
  EXPECT_THROW(Graph(-1), std::invalid_argument);
  Graph g(2);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
}

TEST(Graph, CaterpillarLayout) {
  Graph g = caterpillar({2, 1, 3});
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_TRUE(is_tree(g));
  auto deg = g.degrees();
  EXPECT_EQ(deg[0], 2);  // one leaf plus the spine
  EXPECT_EQ(deg[1], 2);
  EXPECT_EQ(deg[2], 3);
  EXPECT_EQ(CaterpillarSpec({2, 1, 3}).to_string(), "C(2,1,3)");
  EXPECT_THROW(CaterpillarSpec(std::vector<unsigned>{}), std::invalid_argument);
  EXPECT_THROW(CaterpillarSpec({1, 0}), std::invalid_argument);
}

TEST(Graph, ChordGraphs) {
  Graph q = q_graph(3, {1, 1, 1});
  EXPECT_EQ(q.edge_count(), 3u);
  EXPECT_TRUE(q.has_edge(0, 2));
  Graph t = theta_graph(3, {1, 1, 1, 1});
  EXPECT_EQ(t.edge_count(), 5u);
  EXPECT_TRUE(t.has_edge(0, 2));
  EXPECT_TRUE(t.has_edge(0, 3));
  EXPECT_THROW(q_graph(2, {1, 1}), std::invalid_argument);
  EXPECT_THROW(q_graph(4, {1, 1, 1}), std::out_of_range);
  EXPECT_THROW(theta_graph(3, {1, 1, 1}), std::out_of_range);
}

TEST(Graph, CompleteGraphs) {
  EXPECT_EQ(complete(5).edge_count(), 10u);
  Graph k = complete_bipartite(2, 3);
  EXPECT_EQ(k.edge_count(), 6u);
  EXPECT_FALSE(k.has_edge(0, 1));
  EXPECT_TRUE(k.has_edge(1, 4));
}

TEST(Graph, OnePointUnionIdentifiesBases) {
  PointedGraph a = pointed_caterpillar({3}, 1);       // star centre
  PointedGraph b = pointed_caterpillar({1, 2}, 1, 2); // path, bases at both spine vertices
  PointedGraph u = one_point_union(a, b);
  EXPECT_EQ(u.graph.vertex_count(), 3 + 3 - 1);
  EXPECT_EQ(u.graph.edge_count(), 4u);
  EXPECT_EQ(u.left_base, 0);
  EXPECT_EQ(u.graph.degrees()[0], 3);
  PointedGraph s = symmetric_composite(a, b);
  EXPECT_EQ(s.graph.vertex_count(), 7);
  EXPECT_EQ(s.graph.edge_count(), 6u);
  EXPECT_TRUE(is_tree(s.graph));
}

TEST(Graph, PointedBasesMustExist) {
  EXPECT_THROW(PointedGraph(Graph(2), 2), std::out_of_range);
  EXPECT_THROW(pointed_caterpillar({1, 1}, 3), std::out_of_range);
}

TEST(Graph, DeletionsAndComponents) {
  Graph p = caterpillar({1, 1, 1, 1});
  Graph e = delete_edge(p, 1, 2);
  EXPECT_EQ(connected_components(e).size(), 2u);
  auto d = delete_vertices(p, {1});
  EXPECT_EQ(d.graph.vertex_count(), 3);
  EXPECT_EQ(d.graph.edge_count(), 1u);
  EXPECT_EQ(d.old_to_new[1], -1);
  EXPECT_EQ(d.old_to_new[2], 1);
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_FALSE(is_connected(Graph(2)));
}

TEST(Graph, Bridges) {
  EXPECT_EQ(bridges(caterpillar({2, 2})).size(), 3u);
  EXPECT_TRUE(bridges(complete(4)).empty());
  // triangle with a pendant edge: only the pendant edge is a bridge
  Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto b = bridges(g);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (Edge{2, 3}));
}
