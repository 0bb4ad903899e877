#include "hosoya/canonical.hpp"
#include "hosoya/matching.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <thread>

using namespace hosoya;

namespace {
std::vector<BigInt> big(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST(Matching, SmallExamples) {
  EXPECT_EQ(matching_poly_bruteforce(caterpillar({2, 2})).coeffs, big({1, 3, 1}));
  EXPECT_EQ(matching_poly(caterpillar({2, 2})).coeffs, big({1, 3, 1}));
  EXPECT_EQ(matching_poly_bruteforce(Graph(1)).coeffs, big({1}));
  EXPECT_EQ(matching_poly(Graph(0)).coeffs, big({1}));
  EXPECT_EQ(hosoya_z(complete(4)), 10);
  EXPECT_EQ(hosoya_z(complete_bipartite(2, 3)), 13);
  EXPECT_EQ(hosoya_z_bruteforce(Graph(5)), 1);
}

TEST(Matching, AllEnginesAgreeWithSubsetOracle) {
  std::mt19937_64 rng(21);
  HosoyaEngine engine;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_small_connected(rng, 14);
    const auto counts = big(oracle::matching_counts(g));
    ASSERT_EQ(matching_poly_bruteforce(g).coeffs, counts);
    ASSERT_EQ(matching_poly(g).coeffs, counts);
    ASSERT_EQ(engine.z(g), oracle::z(g));
    ASSERT_EQ(count_matchings_capped(g, 1'000'000), oracle::z(g));
  }
}

TEST(Matching, ClosedFormsForPathsAndStars) {
  // Z of the path on n vertices is F(n+1); Z of K_{1,m} is m+1.
  for (unsigned n = 1; n <= 60; ++n) {
    EXPECT_EQ(hosoya_z(caterpillar(CaterpillarSpec(std::vector<unsigned>(n, 1)))), fibonacci(n + 1));
    EXPECT_EQ(hosoya_z(caterpillar({n})), n);
  }
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(10), 55);
  EXPECT_EQ(fibonacci(100), parse_bigint("354224848179261915075"));
}

TEST(Matching, CompleteGraphsMatchTelephoneNumbers) {
  // Z(K_n) satisfies T(n) = T(n-1) + (n-1) T(n-2).
  std::vector<BigInt> t{1, 1};
  for (int n = 2; n <= 10; ++n) t.push_back(t[n - 1] + (n - 1) * t[n - 2]);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(hosoya_z(complete(n)), t[n]) << n;
}

TEST(Matching, CapStopsEarly) {
  Graph k = complete(8);  // Z = 764
  EXPECT_EQ(count_matchings_capped(k, 10), 11u);
  EXPECT_EQ(count_matchings_capped(k, 764), 764u);
  EXPECT_EQ(count_matchings_capped(k, 763), 764u);
}

TEST(Matching, BigValuesStayExact) {
  // A long path overflows 64 bits; F(201) is known exactly.
  Graph p = caterpillar(CaterpillarSpec(std::vector<unsigned>(200, 1)));
  EXPECT_EQ(hosoya_z(p), parse_bigint("453973694165307953197296969697410619233826"));
  EXPECT_FALSE(fits_u64(hosoya_z(p)));
}

TEST(Matching, PointedFamily) {
  PointedGraph p = pointed_caterpillar({1, 2}, 1, 2);  // path a-b-c with bases a, b
  auto f = hosoya_z_pointed_family(p);
  EXPECT_EQ(f.whole, 3);
  EXPECT_EQ(f.minus_left, 2);
  EXPECT_EQ(f.minus_right, 1);
  EXPECT_EQ(f.minus_both, 1);
}

TEST(Matching, MemoIsBoundedAndThreadSafe) {
  HosoyaEngine engine(32);
  std::mt19937_64 rng(4);
  std::vector<Graph> graphs;
  for (int i = 0; i < 40; ++i) graphs.push_back(oracle::random_small_connected(rng, 14));
  std::vector<std::thread> workers;
  std::vector<int> failures(4, 0);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (const auto& g : graphs)
        if (engine.z(g) != oracle::z(g)) ++failures[t];
    });
  for (auto& w : workers) w.join();
  EXPECT_EQ(failures, std::vector<int>(4, 0));
  EXPECT_LE(engine.memo_size(), 32u);
  HosoyaEngine none(0);
  EXPECT_EQ(none.z(complete(6)), 76);
  EXPECT_EQ(none.memo_size(), 0u);
}

TEST(Matching, CacheRoundTripRejectsWrongEntries) {
  const std::string path = ::testing::TempDir() + "z_cache_test.tsv";
  HosoyaEngine writer;
  writer.z(complete(7));
  writer.z(q_graph(3, {2, 3, 4}));
  ASSERT_GT(writer.memo_size(), 0u);
  save_cache(path, writer);

  HosoyaEngine reader;
  auto loaded = load_cache(path, reader);
  EXPECT_EQ(loaded.accepted, writer.memo_size());
  EXPECT_EQ(loaded.rejected, 0u);

  {
    std::ofstream out(path, std::ios::app);
    out << canonical_key(complete(4)) << "\t11\n";  // wrong value
    out << "C~\tnot-a-number\n";
    out << "garbage line\n";
    out << to_graph6(Graph(4, {{0, 1}, {2, 3}, {1, 2}})) << "\t5\n";  // right value, non-canonical key
  }
  HosoyaEngine second;
  loaded = load_cache(path, second);
  EXPECT_EQ(loaded.accepted, writer.memo_size());
  EXPECT_EQ(loaded.rejected, 4u);
  EXPECT_EQ(second.z(complete(4)), 10);
  std::remove(path.c_str());
  EXPECT_EQ(load_cache(path, second).accepted, 0u);
}
