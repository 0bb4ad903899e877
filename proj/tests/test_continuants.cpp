#include "hosoya/continuants.hpp"
#include "hosoya/matching.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hosoya;

namespace {
std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

// Continuant as the determinant-free sum over deletions of disjoint adjacent
// pairs (Euler's rule), independent of the recurrence.
BigInt euler_continuant(const std::vector<unsigned>& a) {
  const std::size_t d = a.size();
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d ? d - 1 : 0)); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < d - 1 && ok; ++i) ok = !((mask >> i & 1) && (mask >> (i + 1) & 1));
    if (!ok) continue;
    BigInt term = 1;
    for (std::size_t i = 0; i < d; ++i) {
      const bool gone = (i + 1 < d && (mask >> i & 1)) || (i > 0 && (mask >> (i - 1) & 1));
      if (!gone) term *= a[i];
    }
    total += term;
  }
  return total;
}
}  // namespace

TEST(Continuant, SmallValues) {
  EXPECT_EQ(continuant(std::vector<unsigned>{}), 1);
  EXPECT_EQ(continuant({7}), 7);
  EXPECT_EQ(continuant({1, 2, 3}), 10);
  EXPECT_EQ(continuant({2, 3}), 7);
  EXPECT_THROW(continuant({1, 0}), std::invalid_argument);
}

TEST(Continuant, MatchesEulerRule) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<unsigned> a(std::uniform_int_distribution<int>(1, 10)(rng));
    for (auto& x : a) x = std::uniform_int_distribution<unsigned>(1, 9)(rng);
    ASSERT_EQ(continuant(a), euler_continuant(a));
  }
}

TEST(Continuant, ReversalInvariant) {
  std::vector<unsigned> a{3, 1, 4, 1, 5, 9, 2, 6};
  std::vector<unsigned> r(a.rbegin(), a.rend());
  EXPECT_EQ(continuant(a), continuant(r));
}

TEST(Continuant, EqualsCaterpillarIndex) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<unsigned> a(std::uniform_int_distribution<int>(1, 8)(rng));
    for (auto& x : a) x = std::uniform_int_distribution<unsigned>(1, 6)(rng);
    ASSERT_EQ(continuant(a), hosoya_z_bruteforce(caterpillar(CaterpillarSpec(a))));
  }
}

TEST(ContinuedFraction, Expansions) {
  EXPECT_EQ(cf_expand(10, 7).terms(), big({1, 2, 3}));
  EXPECT_EQ(cf_expand(7, 4).terms(), big({1, 1, 3}));
  EXPECT_EQ(cf_expand(2, 1).terms(), big({2}));
  EXPECT_EQ(cf_expand(13, 8).terms(), big({1, 1, 1, 1, 2}));
  EXPECT_EQ(cf_expand(10, 7).to_string(), "[1,2,3]");
  EXPECT_THROW(cf_expand(4, 2), std::invalid_argument);
  EXPECT_THROW(cf_expand(3, 3), std::invalid_argument);
  EXPECT_THROW(cf_expand(3, 0), std::invalid_argument);
}

TEST(ContinuedFraction, NumeratorAndDenominatorAreContinuants) {
  for (int m = 2; m <= 80; ++m)
    for (int n = 1; n < m; ++n) {
      if (gcd(BigInt(m), BigInt(n)) != 1) continue;
      auto t = cf_expand(m, n).terms();
      ASSERT_EQ(continuant(t), m);
      ASSERT_EQ(continuant(std::vector<BigInt>(t.begin() + 1, t.end())), n);
      auto [num, den] = evaluate_nested(t);
      ASSERT_EQ(num, m);
      ASSERT_EQ(den, n);
      ASSERT_TRUE(t.size() == 1 || t.back() >= 2);
    }
}

TEST(ContinuedFraction, HugeValues) {
  BigInt m = fibonacci(300), n = fibonacci(299);
  auto t = cf_expand(m, n).terms();
  EXPECT_EQ(t.size(), 298u);  // [1,1,...,1,2]
  EXPECT_EQ(t.back(), 2);
  auto [num, den] = evaluate_nested(t);
  EXPECT_EQ(num, m);
  EXPECT_EQ(den, n);
}

TEST(ContinuedFraction, CanonicalFormAndValidation) {
  EXPECT_EQ(canonical_terms(std::vector<unsigned>{1, 2, 2, 1}), big({1, 2, 3}));
  EXPECT_EQ(canonical_terms(std::vector<unsigned>{1}), big({1}));
  EXPECT_THROW(ContinuedFraction(big({1, 1})), std::invalid_argument);
  EXPECT_THROW(ContinuedFraction(big({})), std::invalid_argument);
  EXPECT_THROW(ContinuedFraction(big({0, 2})), std::invalid_argument);
  EXPECT_EQ(ContinuedFraction(big({1, 2, 3})).small_terms(), (std::vector<unsigned>{1, 2, 3}));
}

TEST(ContinuantUniqueness, ExhaustiveSmallTuples) {
  std::vector<std::vector<unsigned>> tuples;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty() && cur.back() >= 2) tuples.push_back(cur);
    if (cur.size() == 4) return;
    for (unsigned a = 1; a <= 4; ++a) {
      cur.push_back(a);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  for (const auto& a : tuples)
    for (const auto& b : tuples) ASSERT_TRUE(continuant_uniqueness_check(a, b));
  EXPECT_THROW(continuant_uniqueness_check({1, 1}, {2}), std::invalid_argument);
}
