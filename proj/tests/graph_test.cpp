#include "ftmd/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ftmd/cotree.hpp"
#include "test_support.hpp"

namespace ftmd {
namespace {

using testing::make_graph;

TEST(Graph, RejectsSelfLoopsAndDuplicates) {
  const std::vector<std::pair<VertexId, VertexId>> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), GraphError);
  const std::vector<std::pair<VertexId, VertexId>> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(3, dup), GraphError);
  const std::vector<std::pair<VertexId, VertexId>> out_of_range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, out_of_range), GraphError);
}

TEST(Graph, AdjacencyIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::graph_from_code(8, rng() & ((1ull << 28) - 1));
    for (VertexId u = 0; u < 8; ++u) {
      for (VertexId v : g.neighbors(u)) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(g.has_edge(v, u));
      }
    }
  }
}

TEST(Complement, OfK2IsTwoIsolatedVertices) {
  const Graph c = complement(testing::k2());
  EXPECT_EQ(c.vertex_count(), 2u);
  EXPECT_EQ(c.edge_count(), 0u);
}

TEST(Complement, OfEmptyGraphIsComplete) {
  EXPECT_EQ(complement(Graph(3)), Graph::complete(3));
}

TEST(Complement, IsAnInvolution) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::graph_from_code(8, rng() & ((1ull << 28) - 1));
    const Graph c = complement(g);
    EXPECT_EQ(g.edge_count() + c.edge_count(), 28u);
    for (VertexId u = 0; u < 8; ++u)
      for (VertexId v : c.neighbors(u)) EXPECT_TRUE(c.has_edge(v, u));
    EXPECT_EQ(complement(c), g);
  }
}

TEST(Bfs, PathDistances) {
  const auto row = bfs_distances(testing::p3(), 0);
  EXPECT_EQ(row.source, 0u);
  EXPECT_EQ(row.dist, (std::vector<Distance>{0, 1, 2}));
}

TEST(Bfs, UnreachableAcrossComponents) {
  const auto row = bfs_distances(testing::k2_plus_k1(), 0);
  EXPECT_EQ(row.dist[0], Distance{0});
  EXPECT_EQ(row.dist[1], Distance{1});
  EXPECT_FALSE(row.dist[2].has_value());
}

TEST(Bfs, SourceOutOfRange) {
  EXPECT_THROW(bfs_distances(testing::p3(), 3), GraphError);
}

TEST(Bfs, ConnectedCographsHaveDiameterAtMostTwo) {
  std::mt19937_64 rng(2024);
  int connected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_cograph(rng, 16);
    if (!is_connected(g)) continue;
    ++connected;
    for (const auto& row : all_distances(g)) {
      for (const auto& d : row.dist) {
        ASSERT_TRUE(d.has_value());
        EXPECT_LE(*d, 2u);
      }
    }
  }
  EXPECT_GT(connected, 50);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(testing::k2_plus_k1()),
            (std::vector<VertexSet>{{0, 1}, {2}}));
  EXPECT_EQ(connected_components(testing::p3()), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(connected_components(testing::two_k2()),
            (std::vector<VertexSet>{{0, 1}, {2, 3}}));
  // Order follows the smallest member, not discovery order.
  const Graph g = make_graph(5, {{0, 4}, {1, 3}});
  EXPECT_EQ(connected_components(g), (std::vector<VertexSet>{{0, 4}, {1, 3}, {2}}));
}

TEST(InducedSubgraph, Examples) {
  const VertexSet ends{0, 2};
  const auto sub = induced_subgraph(testing::p3(), ends);
  EXPECT_EQ(sub.graph, Graph(2));
  EXPECT_EQ(sub.to_old, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(sub.to_new[2], std::optional<VertexId>{1});
  EXPECT_FALSE(sub.to_new[1].has_value());

  const VertexSet all{0, 1, 2};
  const auto whole = induced_subgraph(testing::p3(), all);
  EXPECT_EQ(whole.graph, testing::p3());
  EXPECT_EQ(whole.to_old, all);

  const VertexSet pair{1, 2};
  EXPECT_EQ(induced_subgraph(Graph::complete(3), pair).graph, testing::k2());
}

TEST(WeightMap, RejectsNegativeAndNan) {
  EXPECT_THROW(WeightMap(std::vector<double>{1.0, -0.5}), GraphError);
  EXPECT_THROW(WeightMap(std::vector<double>{std::nan("")}), GraphError);
  const WeightMap w(std::vector<double>{0.0, 2.5, 4.0});
  const VertexSet s{1, 2};
  EXPECT_EQ(w.total(s), 6.5);
}

}  // namespace
}  // namespace ftmd
