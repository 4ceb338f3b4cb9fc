#include "ftmd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace ftmd {

namespace {

void check_vertex(std::size_t n, VertexId v) {
  if (v >= n) {
    throw GraphError("vertex " + std::to_string(v) + " out of range (n = " +
                     std::to_string(n) + ")");
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw GraphError("duplicate edge");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

Graph Graph::complete(std::size_t n) {
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph Graph::path(std::size_t n) {
  GraphBuilder b(n);
  for (VertexId v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (VertexId v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v) {
  check_vertex(adjacency_.size(), u);
  check_vertex(adjacency_.size(), v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  return *this;
}

Graph GraphBuilder::build() && {
  Graph g;
  std::size_t degree_sum = 0;
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    degree_sum += adj.size();
  }
  g.adjacency_ = std::move(adjacency_);
  g.edge_count_ = degree_sum / 2;
  return g;
}

WeightMap::WeightMap(std::vector<double> weights) : weights_(std::move(weights)) {
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    if (!std::isfinite(weights_[v]) || weights_[v] < 0.0) {
      throw GraphError("weight of vertex " + std::to_string(v) +
                       " must be finite and non-negative");
    }
  }
}

WeightMap WeightMap::uniform(std::size_t n, double value) {
  return WeightMap(std::vector<double>(n, value));
}

double WeightMap::total(std::span<const VertexId> set) const {
  double sum = 0.0;
  for (VertexId v : set) sum += (*this)[v];
  return sum;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  GraphBuilder b(n);
  std::vector<bool> adjacent(n, false);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.neighbors(u)) adjacent[w] = true;
    for (VertexId v = u + 1; v < n; ++v) {
      if (!adjacent[v]) b.add_edge(u, v);
    }
    for (VertexId w : g.neighbors(u)) adjacent[w] = false;
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<VertexId>(a.vertex_count());
  GraphBuilder out(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return std::move(out).build();
}

DistanceRow bfs_distances(const Graph& g, VertexId source) {
  check_vertex(g.vertex_count(), source);
  DistanceRow row{source, std::vector<Distance>(g.vertex_count())};
  std::deque<VertexId> queue{source};
  row.dist[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (!row.dist[w]) {
        row.dist[w] = *row.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return row;
}

std::vector<DistanceRow> all_distances(const Graph& g) {
  std::vector<DistanceRow> rows;
  rows.reserve(g.vertex_count());
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    rows.push_back(bfs_distances(g, s));
  }
  return rows;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> components;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
  InducedSubgraph out;
  out.to_new.assign(g.vertex_count(), std::nullopt);
  out.to_old.assign(s.begin(), s.end());
  std::sort(out.to_old.begin(), out.to_old.end());
  out.to_old.erase(std::unique(out.to_old.begin(), out.to_old.end()),
                   out.to_old.end());
  for (VertexId i = 0; i < out.to_old.size(); ++i) {
    check_vertex(g.vertex_count(), out.to_old[i]);
    out.to_new[out.to_old[i]] = i;
  }
  GraphBuilder b(out.to_old.size());
  for (VertexId i = 0; i < out.to_old.size(); ++i) {
    for (VertexId w : g.neighbors(out.to_old[i])) {
      if (auto j = out.to_new[w]; j && i < *j) b.add_edge(i, *j);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

}  // namespace ftmd
