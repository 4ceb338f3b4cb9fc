#pragma once

// Shared fixtures for the unit and acceptance suites: small named graphs,
// exhaustive cotree enumeration, and helpers that stay independent of the
// DP code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ftmd/cotree.hpp"
#include "ftmd/graph.hpp"

namespace ftmd::testing {

inline Graph make_graph(std::size_t n,
                        std::vector<std::pair<VertexId, VertexId>> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph two_k1() { return Graph(2); }
inline Graph k2() { return make_graph(2, {{0, 1}}); }
inline Graph p3() { return make_graph(3, {{0, 1}, {1, 2}}); }
inline Graph p4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph k2_plus_k1() { return make_graph(3, {{0, 1}}); }
inline Graph two_k2() { return make_graph(4, {{0, 1}, {2, 3}}); }
inline Graph c4() { return Graph::cycle(4); }

/// Graph on n vertices whose edges are the set bits of `code` over the pairs
/// u < v in lexicographic order.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++bit) {
      if (code >> bit & 1u) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

/// Induced P4 by trying every ordered 4-tuple of distinct vertices.
inline bool has_induced_p4_brute_force(const Graph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = 0; b < n; ++b)
      for (VertexId c = 0; c < n; ++c)
        for (VertexId d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
              !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d)) {
            return true;
          }
        }
  return false;
}

/// Every normalized cotree shape with `leaves` leaves, as s-expressions with
/// leaves labelled left to right. Counts: 1, 2, 8, 40, 224, 1344.
inline std::vector<std::string> all_cotree_sexprs(std::size_t leaves) {
  // Shapes use 'x' for an unlabelled leaf.
  std::vector<std::vector<std::string>> shapes(leaves + 1);
  if (leaves >= 1) shapes[1] = {"x"};
  for (std::size_t m = 2; m <= leaves; ++m) {
    for (std::size_t k = 1; k < m; ++k) {
      for (const auto& l : shapes[k]) {
        for (const auto& r : shapes[m - k]) {
          const std::string u = "(U " + l + " " + r + ")";
          shapes[m].push_back(u);
          shapes[m].push_back("(C " + u + ")");
        }
      }
    }
  }
  std::vector<std::string> out;
  for (const auto& shape : shapes[leaves]) {
    std::string labelled;
    VertexId next = 0;
    for (char ch : shape) {
      if (ch == 'x') {
        labelled += "L" + std::to_string(next++);
      } else {
        labelled += ch;
      }
    }
    out.push_back(std::move(labelled));
  }
  return out;
}

inline std::vector<Cotree> all_cotrees(std::size_t leaves) {
  std::vector<Cotree> out;
  for (const auto& s : all_cotree_sexprs(leaves)) out.push_back(parse_sexpr(s));
  return out;
}

/// Relabels vertices by a random permutation.
inline Graph shuffle_labels(const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  GraphBuilder b(g.vertex_count());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

/// Random cograph with 1..max_n vertices and shuffled labels.
inline Graph random_cograph(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = 1 + rng() % max_n;
  return shuffle_labels(realize(random_cotree(n, rng())), rng);
}

inline WeightMap random_integer_weights(std::mt19937_64& rng, std::size_t n,
                                        unsigned max_weight) {
  std::vector<double> w(n);
  for (auto& x : w) x = static_cast<double>(rng() % (max_weight + 1));
  return WeightMap(std::move(w));
}

/// The graph denoted by the subtree at `id`, on local ids 0..k-1, with the
/// original leaf label of every local id.
struct SubtreeGraph {
  Graph graph;
  std::vector<VertexId> labels;
};

inline SubtreeGraph realize_subtree(const Cotree& t, NodeId id) {
  CotreeBuilder b;
  std::vector<VertexId> labels;
  std::function<NodeId(NodeId)> copy = [&](NodeId x) -> NodeId {
    const auto& node = t.node(x);
    switch (node.kind) {
      case NodeKind::Leaf:
        labels.push_back(node.vertex);
        return b.leaf(static_cast<VertexId>(labels.size() - 1));
      case NodeKind::Union: {
        const NodeId l = copy(node.left);
        const NodeId r = copy(node.right);
        return b.make_union(l, r);
      }
      case NodeKind::Complement:
        return b.make_complement(copy(node.left));
    }
    return 0;
  };
  const NodeId root = copy(id);
  const Cotree sub = std::move(b).finish(root);
  return {realize(sub), std::move(labels)};
}

inline VertexSet to_local(const VertexSet& set,
                          const std::vector<VertexId>& labels) {
  VertexSet out;
  for (VertexId v : set) {
    const auto it = std::find(labels.begin(), labels.end(), v);
    out.push_back(static_cast<VertexId>(it - labels.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ftmd::testing
