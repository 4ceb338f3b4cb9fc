#include "ftmd/resolving.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace ftmd {
namespace {

using testing::c4;
using testing::k2;
using testing::p3;
using testing::two_k1;
using testing::two_k2;

VertexSet all_vertices(const Graph& g) {
  VertexSet v(g.vertex_count());
  for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  VertexSet s;
  const std::uint64_t bits = rng();
  for (VertexId v = 0; v < n; ++v) {
    if (bits >> v & 1u) s.push_back(v);
  }
  return s;
}

TEST(HCount, Examples) {
  EXPECT_EQ(h_count(k2(), VertexSet{0}, 0, 1), 1u);
  EXPECT_EQ(h_count(p3(), VertexSet{0, 2}, 0, 2), 2u);
  EXPECT_EQ(h_count(two_k2(), VertexSet{0, 1}, 2, 3), 0u);
  EXPECT_THROW(h_count(k2(), VertexSet{0}, 1, 1), GraphError);
}

TEST(HCount, SymmetricAndMonotone) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_cograph(rng, 10);
    const std::size_t n = g.vertex_count();
    if (n < 2) continue;
    const VertexSet r = random_subset(rng, n);
    VertexSet bigger = r;
    bigger.push_back(static_cast<VertexId>(rng() % n));
    std::sort(bigger.begin(), bigger.end());
    bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        EXPECT_EQ(h_count(g, r, u, v), h_count(g, r, v, u));
        EXPECT_LE(h_count(g, r, u, v), h_count(g, bigger, u, v));
      }
    }
  }
}

TEST(Resolving, Examples) {
  EXPECT_TRUE(is_resolving(k2(), VertexSet{0}));
  EXPECT_FALSE(is_resolving(Graph::complete(3), VertexSet{0}));
  EXPECT_EQ(find_unresolved_pair(Graph::complete(3), VertexSet{0}),
            (VertexPair{1, 2}));
  EXPECT_TRUE(is_resolving(p3(), VertexSet{0}));
}

TEST(Resolving, UnreachableIsADistinctValue) {
  // 2K2 with R = {0}: vertex 0 sees 0, 1, inf, inf. Pair (2, 3) is unresolved.
  EXPECT_EQ(find_unresolved_pair(two_k2(), VertexSet{0}), (VertexPair{2, 3}));
  EXPECT_TRUE(is_resolving(two_k2(), VertexSet{0, 2}));
}

TEST(Resolving, RejectsOutOfRangeMembers) {
  EXPECT_THROW(is_resolving(k2(), VertexSet{2}), GraphError);
}

TEST(KResolving, Examples) {
  EXPECT_TRUE(is_k_resolving(k2(), VertexSet{0, 1}, 2));
  EXPECT_FALSE(is_k_resolving(p3(), VertexSet{0, 1, 2}, 3));
  EXPECT_EQ(find_k_violation(p3(), VertexSet{0, 1, 2}, 3), (VertexPair{0, 2}));
  EXPECT_THROW(is_k_resolving(k2(), VertexSet{0}, 0), GraphError);
}

TEST(KResolving, FullSetIsTwoResolving) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::graph_from_code(7, rng() & ((1ull << 21) - 1));
    const VertexSet all = all_vertices(g);
    EXPECT_TRUE(is_k_resolving(g, all, 1));
    EXPECT_TRUE(is_k_resolving(g, all, 2));
  }
}

TEST(FaultTolerant, Examples) {
  EXPECT_TRUE(is_fault_tolerant(k2(), VertexSet{0, 1}));
  EXPECT_TRUE(is_fault_tolerant(p3(), VertexSet{0, 2}));
  EXPECT_FALSE(is_fault_tolerant(p3(), VertexSet{0, 1}));
  // Removing 0 leaves {1}, which cannot tell 0 from 2.
  EXPECT_EQ(find_fault_tolerance_violation(p3(), VertexSet{0, 1}),
            (VertexPair{0, 2}));
}

TEST(FaultTolerant, EmptySetOnlyForTrivialGraphs) {
  EXPECT_TRUE(is_fault_tolerant(Graph(1), VertexSet{}));
  EXPECT_FALSE(is_fault_tolerant(k2(), VertexSet{}));
}

TEST(FaultTolerant, RemovalDefinitionMatchesTwoResolverCount) {
  // Arbitrary graphs, not only cographs.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const Graph g = testing::graph_from_code(n, rng());
    const VertexSet r = random_subset(rng, n);
    EXPECT_EQ(is_fault_tolerant(g, r), is_k_resolving(g, r, 2));
    EXPECT_EQ(is_resolving(g, r), is_k_resolving(g, r, 1));
  }
}

TEST(TwoNR, Examples) {
  EXPECT_TRUE(is_2nr(k2(), VertexSet{0, 1}));
  EXPECT_TRUE(is_2nr(two_k2(), VertexSet{0, 1, 2, 3}));
  EXPECT_FALSE(is_2nr(two_k2(), VertexSet{0, 1}));
  EXPECT_EQ(find_2nr_violation(two_k2(), VertexSet{0, 1}), (VertexPair{2, 3}));
  EXPECT_TRUE(is_2nr(c4(), VertexSet{0, 1, 2, 3}));
}

TEST(TwoNR, AgreesWithPairwiseHCount) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const Graph g = testing::graph_from_code(n, rng());
    const VertexSet r = random_subset(rng, n);
    bool expected = true;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) expected = expected && h_count(g, r, u, v) >= 2;
    EXPECT_EQ(is_2nr(g, r), expected);
  }
}

TEST(TwoNR, ImpliesFaultTolerantOnAnyGraph) {
  std::mt19937_64 rng(31);
  int hits = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const Graph g = testing::graph_from_code(n, rng());
    const VertexSet r = random_subset(rng, n);
    if (is_2nr(g, r)) {
      ++hits;
      EXPECT_TRUE(is_fault_tolerant(g, r));
    }
  }
  EXPECT_GT(hits, 100);
}

TEST(KVertexProfile, Examples) {
  const auto a = k_vertex_profile(two_k1(), VertexSet{0, 1});
  EXPECT_EQ(a.counts, (std::vector<std::size_t>{1, 1}));
  EXPECT_FALSE(a.has0);
  EXPECT_TRUE(a.has1);
  EXPECT_TRUE(a.has_r_minus_1);
  EXPECT_FALSE(a.has_r);

  const auto b = k_vertex_profile(k2(), VertexSet{0});
  EXPECT_EQ(b.counts, (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(b.has1);
  EXPECT_TRUE(b.has_r);

  const auto c = k_vertex_profile(p3(), VertexSet{0, 2});
  EXPECT_EQ(c.counts, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_FALSE(c.has0);
  EXPECT_TRUE(c.has1);
  EXPECT_TRUE(c.has_r_minus_1);
  EXPECT_TRUE(c.has_r);
}

TEST(KVertexProfile, EmptySet) {
  const auto p = k_vertex_profile(p3(), VertexSet{});
  EXPECT_TRUE(p.has0);
  EXPECT_TRUE(p.has_r);
  EXPECT_FALSE(p.has_r_minus_1);
}

TEST(PairMasks, MatchSetCheckers) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = testing::graph_from_code(n, rng());
    const PairMasks masks(g);
    const VertexSet r = random_subset(rng, n);
    const std::uint64_t m = to_mask(r);
    EXPECT_EQ(from_mask(m), r);
    EXPECT_EQ(masks.is_k_resolving(m, 1), is_resolving(g, r));
    EXPECT_EQ(masks.is_k_resolving(m, 2), is_fault_tolerant(g, r));
    EXPECT_EQ(masks.is_2nr(m), is_2nr(g, r));
  }
  EXPECT_THROW(PairMasks(Graph(65)), GraphError);
}

}  // namespace
}  // namespace ftmd
