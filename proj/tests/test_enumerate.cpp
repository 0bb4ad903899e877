#include "hosoya/enumerate.hpp"
#include "hosoya/matching.hpp"
#include "hosoya/ztable.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace hosoya;

namespace {

const GenerationFilter kAll = [](const Graph&, const std::vector<int>&) { return true; };

// Every labeled connected graph on n vertices with at most max_edges edges.
template <class Visit>
void for_each_labeled_connected(int n, std::size_t max_edges, Visit&& visit) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_edges) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    Graph g(n, edges);
    if (oracle::connected(g)) visit(g);
  }
}

std::map<std::pair<int, std::size_t>, std::size_t> count_by_shape(const std::vector<ColoredGraph>& graphs) {
  std::map<std::pair<int, std::size_t>, std::size_t> out;
  for (const auto& g : graphs) ++out[{g.graph.vertex_count(), g.graph.edge_count()}];
  return out;
}

}  // namespace

TEST(Generation, UncoloredMatchesLabeledOracle) {
  std::map<std::pair<int, std::size_t>, std::set<std::vector<int>>> classes;
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_connected(n, 15, [&](const Graph& g) { classes[{n, g.edge_count()}].insert(oracle::brute_canonical(g)); });
  std::map<std::pair<int, std::size_t>, std::size_t> expected;
  std::size_t total = 0;
  for (const auto& [shape, set] : classes) {
    expected[shape] = set.size();
    total += set.size();
  }
  EXPECT_EQ(total, 1u + 1 + 2 + 6 + 21 + 112);

  auto gen = generate_connected({single_vertex_root()},
                                [](const Graph& g, const std::vector<int>&) { return g.vertex_count() <= 6; });
  EXPECT_FALSE(gen.truncated);
  EXPECT_EQ(count_by_shape(gen.graphs), expected);
  std::set<std::vector<int>> codes;
  for (const auto& g : gen.graphs) codes.insert(oracle::brute_canonical(g.graph));
  EXPECT_EQ(codes.size(), gen.graphs.size());  // no isomorphic duplicates
}

TEST(Generation, ConnectedGraphsByEdgeCount) {
  // Connected graphs with m edges, m = 0..8 (OEIS A002905 with the single vertex prepended).
  const std::vector<std::size_t> known{1, 1, 1, 3, 5, 12, 30, 79, 227};
  auto gen = generate_connected({single_vertex_root()}, kAll, GenerationOptions{8, 2});
  EXPECT_TRUE(gen.truncated);
  std::vector<std::size_t> counts(9, 0);
  for (const auto& g : gen.graphs) ++counts[g.graph.edge_count()];
  EXPECT_EQ(counts, known);
}

TEST(Generation, ParallelRunIsIdentical) {
  auto a = generate_connected({single_vertex_root()}, kAll, GenerationOptions{7, 1});
  auto b = generate_connected({single_vertex_root()}, kAll, GenerationOptions{7, 4});
  ASSERT_EQ(a.graphs.size(), b.graphs.size());
  for (std::size_t i = 0; i < a.graphs.size(); ++i) EXPECT_EQ(a.graphs[i].key, b.graphs[i].key);
}

TEST(Generation, RootedGraphsMatchOracle) {
  std::set<std::vector<int>> expected;
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_connected(n, 4, [&](const Graph& g) {
      for (int v = 0; v < n; ++v) {
        std::vector<int> colors(n, 0);
        colors[v] = 3;
        expected.insert(oracle::brute_canonical(g, colors));
      }
    });
  auto gen = generate_connected({single_vertex_root(3)}, kAll, GenerationOptions{4, 1});
  EXPECT_EQ(gen.graphs.size(), expected.size());
  std::set<std::vector<int>> got;
  for (const auto& g : gen.graphs) got.insert(oracle::brute_canonical(g.graph, g.colors));
  EXPECT_EQ(got, expected);
}

TEST(Generation, TwoMarkedVerticesMatchOracle) {
  std::set<std::vector<int>> expected;
  for (int n = 2; n <= 5; ++n)
    for_each_labeled_connected(n, 4, [&](const Graph& g) {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          std::vector<int> colors(n, 0);
          colors[u] = colors[v] = 1;
          expected.insert(oracle::brute_canonical(g, colors));
        }
    });
  auto gen = generate_connected(marked_path_roots(4, 1, 1), kAll, GenerationOptions{4, 1});
  std::set<std::vector<int>> got;
  for (const auto& g : gen.graphs) got.insert(oracle::brute_canonical(g.graph, g.colors));
  EXPECT_EQ(got.size(), gen.graphs.size());
  EXPECT_EQ(got, expected);
}

TEST(Generation, MonotoneFilterPrunesWithoutLoss) {
  // Z <= 9 forces at most 8 edges, so filtering the unrestricted 8-edge run
  // afterwards must give the same graphs as pruning during generation.
  auto all = generate_connected({single_vertex_root()}, kAll, GenerationOptions{8, 1});
  std::set<std::string> filtered;
  for (const auto& g : all.graphs)
    if (oracle::z(g.graph) <= 9) filtered.insert(g.key);
  ZTable t = enumerate_connected_by_z(9);
  std::set<std::string> pruned;
  for (const auto& [z, graphs] : t.classes)
    for (const auto& g : graphs) {
      EXPECT_EQ(oracle::z(g), z);
      pruned.insert(canonical_key(g));
    }
  EXPECT_EQ(pruned, filtered);
}

TEST(ZTable, SmallClasses) {
  ZTable t = enumerate_connected_by_z(5);
  EXPECT_EQ(t.total(), 7u);
  EXPECT_EQ(t.classes.at(4).size(), 2u);
  EXPECT_THROW(enumerate_connected_by_z(0), std::invalid_argument);
}

TEST(ZTable, ReferenceTablesVerify) {
  TableReport r = verify_reference_tables(2);
  EXPECT_TRUE(r.passed);
  const std::vector<std::size_t> sizes{1, 1, 1, 2, 2, 2, 3, 4, 3, 6, 5, 6, 7};
  ASSERT_EQ(r.classes.size(), sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) EXPECT_EQ(r.classes[i].actual_count, sizes[i]);
  for (const auto& c : r.named)
    if (c.bruteforce) EXPECT_TRUE(c.ok) << c.expression;
  // Known differences in the quoted derivation values are reported, not fixed.
  auto mentions = [&](const std::string& s) {
    return std::any_of(r.discrepancies.begin(), r.discrepancies.end(),
                       [&](const std::string& d) { return d.find(s) != std::string::npos; });
  };
  EXPECT_TRUE(mentions("C(5,2)"));
  EXPECT_TRUE(mentions("C(13)"));
  EXPECT_TRUE(mentions("Q3(1,1,1;2)"));
}
