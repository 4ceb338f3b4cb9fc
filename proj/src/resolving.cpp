#include "ftmd/resolving.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ftmd {

namespace {

std::vector<bool> membership(const Graph& g, std::span<const VertexId> r) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : r) {
    if (v >= g.vertex_count()) {
      throw GraphError("vertex " + std::to_string(v) + " out of range (n = " +
                       std::to_string(g.vertex_count()) + ")");
    }
    in[v] = true;
  }
  return in;
}

VertexSet members(const std::vector<bool>& in) {
  VertexSet out;
  for (VertexId v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

std::size_t resolver_count(const std::vector<DistanceRow>& dist,
                           const VertexSet& r, VertexId u, VertexId v,
                           std::size_t stop_at) {
  std::size_t count = 0;
  for (VertexId w : r) {
    if (dist[w].dist[u] != dist[w].dist[v] && ++count >= stop_at) break;
  }
  return count;
}

std::optional<VertexPair> first_pair_below(const std::vector<DistanceRow>& dist,
                                           const VertexSet& r, std::size_t k) {
  const auto n = static_cast<VertexId>(dist.size());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (resolver_count(dist, r, u, v, k) < k) return VertexPair{u, v};
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t h_count(const Graph& g, std::span<const VertexId> r, VertexId u,
                    VertexId v) {
  if (u == v) throw GraphError("h_count needs two distinct vertices");
  const auto in = membership(g, r);
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw GraphError("vertex out of range");
  }
  std::size_t count = (in[u] ? 1 : 0) + (in[v] ? 1 : 0);
  // Symmetric difference of the two sorted neighbour lists, minus {u, v}.
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  std::vector<VertexId> diff;
  std::set_symmetric_difference(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                std::back_inserter(diff));
  for (VertexId w : diff) {
    if (w != u && w != v && in[w]) ++count;
  }
  return count;
}

std::optional<VertexPair> find_unresolved_pair(const Graph& g,
                                               std::span<const VertexId> r) {
  return find_k_violation(g, r, 1);
}

bool is_resolving(const Graph& g, std::span<const VertexId> r) {
  return !find_unresolved_pair(g, r);
}

std::optional<VertexPair> find_k_violation(const Graph& g,
                                           std::span<const VertexId> r,
                                           std::size_t k) {
  if (k == 0) throw GraphError("k-resolving needs k >= 1");
  const VertexSet set = members(membership(g, r));
  return first_pair_below(all_distances(g), set, k);
}

bool is_k_resolving(const Graph& g, std::span<const VertexId> r,
                    std::size_t k) {
  return !find_k_violation(g, r, k);
}

std::optional<VertexPair> find_fault_tolerance_violation(
    const Graph& g, std::span<const VertexId> r) {
  const VertexSet set = members(membership(g, r));
  const auto dist = all_distances(g);
  if (auto pair = first_pair_below(dist, set, 1)) return pair;
  for (std::size_t i = 0; i < set.size(); ++i) {
    VertexSet reduced = set;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    if (auto pair = first_pair_below(dist, reduced, 1)) return pair;
  }
  return std::nullopt;
}

bool is_fault_tolerant(const Graph& g, std::span<const VertexId> r) {
  return !find_fault_tolerance_violation(g, r);
}

std::optional<VertexPair> find_2nr_violation(const Graph& g,
                                             std::span<const VertexId> r) {
  const auto in = membership(g, r);
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<std::uint8_t> adj_u(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.neighbors(u)) adj_u[w] = 1;
    for (VertexId v = u + 1; v < n; ++v) {
      std::size_t count = (in[u] ? 1 : 0) + (in[v] ? 1 : 0);
      if (count < 2) {
        // Members of R adjacent to exactly one of u, v (other than u, v).
        for (VertexId w : g.neighbors(v)) {
          if (w != u && in[w] && !adj_u[w]) ++count;
        }
        for (VertexId w : g.neighbors(u)) {
          if (w != v && in[w] && !g.has_edge(v, w)) ++count;
        }
      }
      if (count < 2) return VertexPair{u, v};
    }
    for (VertexId w : g.neighbors(u)) adj_u[w] = 0;
  }
  return std::nullopt;
}

bool is_2nr(const Graph& g, std::span<const VertexId> r) {
  return !find_2nr_violation(g, r);
}

KVertexProfile k_vertex_profile(const Graph& g, std::span<const VertexId> r) {
  const auto in = membership(g, r);
  const auto size = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  KVertexProfile p;
  p.counts.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t c = in[v] ? 1 : 0;
    for (VertexId w : g.neighbors(v)) c += in[w] ? 1 : 0;
    p.counts[v] = c;
    p.has0 = p.has0 || c == 0;
    p.has1 = p.has1 || c == 1;
    p.has_r_minus_1 = p.has_r_minus_1 || (size >= 1 && c == size - 1);
    p.has_r = p.has_r || c == size;
  }
  return p;
}

PairMasks::PairMasks(const Graph& g) : n_(g.vertex_count()) {
  if (n_ > kMaxVertices) {
    throw GraphError("PairMasks supports at most 64 vertices");
  }
  const auto dist = all_distances(g);
  std::vector<std::uint64_t> open(n_, 0);
  for (VertexId v = 0; v < n_; ++v) {
    for (VertexId w : g.neighbors(v)) open[v] |= std::uint64_t{1} << w;
  }
  resolvers_.reserve(n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2);
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v = u + 1; v < n_; ++v) {
      std::uint64_t mask = 0;
      for (VertexId w = 0; w < n_; ++w) {
        if (dist[w].dist[u] != dist[w].dist[v]) mask |= std::uint64_t{1} << w;
      }
      resolvers_.push_back(mask);
      h_sets_.push_back((open[u] ^ open[v]) | (std::uint64_t{1} << u) |
                        (std::uint64_t{1} << v));
    }
  }
}

bool PairMasks::is_k_resolving(std::uint64_t r, std::size_t k) const {
  for (std::uint64_t m : resolvers_) {
    if (static_cast<std::size_t>(std::popcount(m & r)) < k) return false;
  }
  return true;
}

bool PairMasks::is_2nr(std::uint64_t r) const {
  for (std::uint64_t m : h_sets_) {
    if (std::popcount(m & r) < 2) return false;
  }
  return true;
}

std::uint64_t to_mask(std::span<const VertexId> set) {
  std::uint64_t mask = 0;
  for (VertexId v : set) {
    if (v >= 64) throw GraphError("vertex id does not fit a 64-bit mask");
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace ftmd
