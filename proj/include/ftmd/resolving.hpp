#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ftmd/graph.hpp"

namespace ftmd {

struct VertexPair {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

/// h_R(u, v) = |(N(u) xor N(v) + {u, v}) & R|. Throws GraphError when u == v.
std::size_t h_count(const Graph& g, std::span<const VertexId> r, VertexId u,
                    VertexId v);

// The find_* functions scan pairs u < v in ascending order and return the
// first pair violating the property, or nullopt when it holds.

/// Pairs with no w in R such that d(u, w) != d(v, w). Unreachable compares
/// equal to unreachable and unequal to every finite distance.
std::optional<VertexPair> find_unresolved_pair(const Graph& g,
                                               std::span<const VertexId> r);
bool is_resolving(const Graph& g, std::span<const VertexId> r);

/// Pairs with fewer than k distinct resolvers in R. Throws on k == 0.
std::optional<VertexPair> find_k_violation(const Graph& g,
                                           std::span<const VertexId> r,
                                           std::size_t k);
bool is_k_resolving(const Graph& g, std::span<const VertexId> r, std::size_t k);

/// Checks R and every R \ {x} for resolvability. The reported pair is the
/// first unresolved pair of the first failing set.
std::optional<VertexPair> find_fault_tolerance_violation(
    const Graph& g, std::span<const VertexId> r);
bool is_fault_tolerant(const Graph& g, std::span<const VertexId> r);

/// Pairs with h_R(u, v) < 2.
std::optional<VertexPair> find_2nr_violation(const Graph& g,
                                             std::span<const VertexId> r);
bool is_2nr(const Graph& g, std::span<const VertexId> r);

/// Closed-neighbourhood counts |N[v] & R| with the four existence flags the
/// cotree DP projects onto.
struct KVertexProfile {
  std::vector<std::size_t> counts;
  bool has0 = false;
  bool has1 = false;
  bool has_r_minus_1 = false;
  bool has_r = false;
};

KVertexProfile k_vertex_profile(const Graph& g, std::span<const VertexId> r);

/// Bitmask form of the checkers for graphs with at most 64 vertices.
///
/// For every pair u < v it stores the set of vertices that resolve the pair by
/// distance and the set N(u) xor N(v) + {u, v}. A candidate set is then a
/// 64-bit mask and each check is a popcount per pair.
class PairMasks {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  /// Throws GraphError when g has more than 64 vertices.
  explicit PairMasks(const Graph& g);

  std::size_t vertex_count() const { return n_; }

  bool is_k_resolving(std::uint64_t r, std::size_t k) const;
  bool is_2nr(std::uint64_t r) const;

  std::span<const std::uint64_t> resolvers() const { return resolvers_; }
  std::span<const std::uint64_t> h_sets() const { return h_sets_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> resolvers_;
  std::vector<std::uint64_t> h_sets_;
};

std::uint64_t to_mask(std::span<const VertexId> set);
VertexSet from_mask(std::uint64_t mask);

}  // namespace ftmd
