#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ftmd {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// Hop count, or std::nullopt when the target lies in another component.
using Distance = std::optional<std::uint32_t>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Adjacency lists are kept sorted and symmetric. Values are immutable once
/// built; use the static constructors or Graph::Builder.
class Graph {
 public:
  Graph() = default;

  /// n isolated vertices.
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Throws GraphError on self-loops, out-of-range ids or duplicate edges.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<VertexId, VertexId>> edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// Edges with u < v in ascending lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;

  friend class GraphBuilder;
};

/// Incremental construction that tolerates repeated edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : adjacency_(n) {}

  /// Adds {u, v}; silently ignores an edge already present. Throws on loops.
  GraphBuilder& add_edge(VertexId u, VertexId v);
  Graph build() &&;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
};

Graph complement(const Graph& g);

/// Non-negative per-vertex cost.
class WeightMap {
 public:
  WeightMap() = default;
  /// Throws GraphError on a negative or NaN weight.
  explicit WeightMap(std::vector<double> weights);

  static WeightMap uniform(std::size_t n, double value = 1.0);

  double operator[](VertexId v) const { return weights_.at(v); }
  std::size_t size() const { return weights_.size(); }
  double total(std::span<const VertexId> set) const;

 private:
  std::vector<double> weights_;
};

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Shortest-path hop counts from `source`.
struct DistanceRow {
  VertexId source = 0;
  std::vector<Distance> dist;
};

DistanceRow bfs_distances(const Graph& g, VertexId source);

/// All-pairs distances, row-major by source.
std::vector<DistanceRow> all_distances(const Graph& g);

/// Components in ascending order of their smallest member; each set sorted.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_new[old] is the new id, or std::nullopt when old is not in the set.
  std::vector<std::optional<VertexId>> to_new;
  /// to_old[new] is the original id.
  std::vector<VertexId> to_old;
};

/// Vertices are renumbered in ascending order of their original ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> s);

}  // namespace ftmd
