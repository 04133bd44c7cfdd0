#include "kostantq/lie_core.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace kostantq;

TEST(PositiveRoots, RankOne) {
  EXPECT_EQ(positive_roots(1), (std::vector<Weight>{{1, -1}}));
}

TEST(PositiveRoots, RankTwoInLexOrder) {
  EXPECT_EQ(positive_roots(2), (std::vector<Weight>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}));
}

TEST(PositiveRoots, RankThreeMatchesPairEnumeration) {
  const auto roots = positive_roots(3);
  ASSERT_EQ(roots.size(), 6u);
  const auto expected = oracle::roots(3);
  for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_EQ(roots[i].coords(), expected[i]);
}

TEST(PositiveRoots, RankZeroRejected) { EXPECT_THROW(positive_roots(0), DomainError); }

TEST(RootSystem, CountsTracesAndRho) {
  for (int n = 1; n <= 5; ++n) {
    const RootSystemA rs(n);
    EXPECT_EQ(rs.num_positive(), static_cast<std::size_t>(n * (n + 1) / 2));
    for (const auto& r : rs.positive_roots()) EXPECT_EQ(r.trace(), 0);
    for (const auto& a : rs.positive_roots_simple())
      for (int x : a) EXPECT_GE(x, 0);
    std::vector<int> rho(rs.size_k());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = static_cast<int>(rs.size_k() - 1 - i);
    EXPECT_EQ(rs.rho().coords(), rho);
  }
}

TEST(RootSystem, SumOfPositiveRootsIsTwiceRho) {
  for (int n = 1; n <= 4; ++n) {
    const RootSystemA rs(n);
    Weight sum = Weight::zero(rs.size_k());
    for (const auto& r : rs.positive_roots()) sum += r;
    for (std::size_t i = 0; i < rs.size_k(); ++i) EXPECT_EQ(sum[i], n - 2 * static_cast<int>(i));
    // Consecutive differences of rho are 1, half those of the root sum.
    for (std::size_t i = 0; i + 1 < rs.size_k(); ++i) {
      EXPECT_EQ(rs.rho()[i] - rs.rho()[i + 1], 1);
      EXPECT_EQ(sum[i] - sum[i + 1], 2);
    }
  }
}

TEST(RootSystem, SimpleRootsExpandPositiveRoots) {
  const RootSystemA rs(3);
  for (std::size_t j = 0; j < rs.num_positive(); ++j) {
    Weight w = Weight::zero(rs.size_k());
    for (std::size_t i = 0; i < rs.simple_roots().size(); ++i)
      w += rs.positive_roots_simple()[j][i] * rs.simple_roots()[i];
    EXPECT_EQ(w, rs.positive_roots()[j]);
  }
}

TEST(WeylGroup, RankOneSigns) {
  std::multiset<int> signs;
  for (const auto& w : weyl_group(1)) signs.insert(w.sign());
  EXPECT_EQ(signs, (std::multiset<int>{-1, 1}));
}

TEST(WeylGroup, RankTwoSignSumAndLongest) {
  int sum = 0;
  int longest = 0;
  std::size_t count = 0;
  for (const auto& w : weyl_group(2)) {
    sum += w.sign();
    longest = std::max(longest, w.length());
    ++count;
  }
  EXPECT_EQ(count, 6u);
  EXPECT_EQ(sum, 0);
  EXPECT_EQ(longest, 3);
}

TEST(WeylGroup, ElementsAreDistinctAndComplete) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& w : weyl_group(n)) seen.insert(w.perm());
    EXPECT_EQ(seen.size(), weyl_group(n).order());
  }
}

namespace {
int parity_by_cycles(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 ? -1 : 1;
}
}  // namespace

TEST(WeylGroup, LengthParityMatchesCycleParity) {
  for (const auto& w : weyl_group(4)) EXPECT_EQ(w.sign(), parity_by_cycles(w.perm()));
}

TEST(WeylGroup, SignIsMultiplicative) {
  const auto elems = weyl_group(3).elements();
  for (const auto& a : elems)
    for (const auto& b : elems) EXPECT_EQ(a.compose(b).sign(), a.sign() * b.sign());
}

TEST(WeylAction, Examples) {
  EXPECT_EQ(act(WeylElement::identity(3), Weight{3, 1, 0}), (Weight{3, 1, 0}));
  EXPECT_EQ(act(WeylElement({1, 0, 2}), Weight{3, 1, 0}), (Weight{1, 3, 0}));
  EXPECT_EQ(act(WeylElement({2, 1, 0}), Weight{2, 1, 0}), (Weight{0, 1, 2}));
}

TEST(WeylAction, ComposeMatchesSuccessiveAction) {
  const Weight v{5, 3, 2, 0};
  const auto elems = weyl_group(3).elements();
  for (const auto& a : elems)
    for (const auto& b : elems) EXPECT_EQ(a.compose(b).act(v), a.act(b.act(v)));
}

TEST(WeylAction, BijectionOnOrbitAndTracePreserved) {
  const Weight v{4, 2, 1, 0};
  std::set<Weight> orbit;
  for (const auto& w : weyl_group(3)) orbit.insert(w.act(v));
  for (const auto& w : weyl_group(3)) {
    std::set<Weight> image;
    for (const auto& u : orbit) {
      image.insert(w.act(u));
      EXPECT_EQ(w.act(u).trace(), v.trace());
    }
    EXPECT_EQ(image, orbit);
  }
}

TEST(WeylAction, DimensionMismatchRejected) {
  EXPECT_THROW(act(WeylElement::identity(3), Weight{1, 0}), std::invalid_argument);
}

TEST(RootCoords, Examples) {
  EXPECT_EQ(to_root_coords(Weight{1, 0, -1}), (SimpleCoords{1, 1}));
  EXPECT_EQ(to_root_coords(Weight{1, -1, 0}), (SimpleCoords{1, 0}));
  EXPECT_EQ(to_root_coords(Weight{2, 0, -2}), (SimpleCoords{2, 2}));
  EXPECT_EQ(from_root_coords({2, 2}), (Weight{2, 0, -2}));
}

TEST(RootCoords, NonzeroTraceRejected) { EXPECT_THROW(to_root_coords(Weight{1, 0, 0}), DomainError); }

TEST(RootCoords, RandomRoundTrip) {
  std::mt19937 gen(12345);
  std::uniform_int_distribution<int> d(-20, 20);
  std::uniform_int_distribution<int> len(2, 6);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> c(static_cast<std::size_t>(len(gen)));
    int s = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) s += c[i] = d(gen);
    c.back() = -s;
    const Weight v(c);
    const RootSystemA rs(static_cast<int>(c.size()) - 1);
    const SimpleCoords a = to_root_coords(v);
    Weight back = Weight::zero(c.size());
    for (std::size_t i = 0; i < a.size(); ++i) back += a[i] * rs.simple_roots()[i];
    EXPECT_EQ(back, v);
  }
}

TEST(Dominance, StrictExamples) {
  EXPECT_TRUE(is_strictly_dominant(Weight{2, 1, 0}));
  EXPECT_FALSE(is_strictly_dominant(Weight{1, 1, 0}));
  EXPECT_TRUE(is_strictly_dominant(Weight{5, 2, 0}));
  EXPECT_TRUE(is_dominant(Weight{1, 1, 0}));
  EXPECT_FALSE(is_dominant(Weight{0, 1, 0}));
}

TEST(WeightText, FormatAndParse) {
  EXPECT_EQ(format_weight(Weight{3, 1, 0}), "3,1,0");
  EXPECT_EQ(parse_weight("3,-1, 0"), (Weight{3, -1, 0}));
  EXPECT_THROW(parse_weight("3,,1"), std::invalid_argument);
  EXPECT_THROW(parse_weight("a"), std::invalid_argument);
  EXPECT_THROW(parse_weight(""), std::invalid_argument);
  EXPECT_THROW(parse_weight("99999999999"), std::invalid_argument);
}
