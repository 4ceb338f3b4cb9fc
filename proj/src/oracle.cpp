#include "ftmd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

#include "ftmd/resolving.hpp"

namespace ftmd {

namespace {

void check_size(const Graph& g, const WeightMap& w) {
  const std::size_t n = g.vertex_count();
  if (n > kOracleMaxVertices) {
    throw OracleLimitError("oracle is limited to " +
                           std::to_string(kOracleMaxVertices) +
                           " vertices, got " + std::to_string(n));
  }
  if (w.size() != n) {
    throw GraphError("weight map size does not match the vertex count");
  }
}

// Every subset is visited; the result does not depend on visiting order.
template <typename Predicate>
OracleResult enumerate(const Graph& g, const WeightMap& w, Predicate accept) {
  const std::size_t n = g.vertex_count();
  std::vector<double> weight_of(std::size_t{1} << n, 0.0);
  std::optional<OracleResult> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (mask != 0) {
      // Sum over the lowest set bit plus the rest, in ascending vertex order.
      const auto low = static_cast<VertexId>(std::countr_zero(mask));
      weight_of[mask] = w[low] + weight_of[mask & (mask - 1)];
    }
    if (!accept(mask)) continue;
    const double weight = weight_of[mask];
    if (!best || weight < best->weight) {
      best = OracleResult{weight, from_mask(mask), 1};
    } else if (weight == best->weight) {
      ++best->optimal_count;
      VertexSet set = from_mask(mask);
      if (std::lexicographical_compare(set.begin(), set.end(),
                                       best->witness.begin(),
                                       best->witness.end())) {
        best->witness = std::move(set);
      }
    }
  }
  // The full vertex set satisfies all three predicates.
  if (!best) throw std::logic_error("no subset satisfies the predicate");
  return *best;
}

}  // namespace

OracleResult oracle_min_ft(const Graph& g, const WeightMap& w) {
  check_size(g, w);
  const PairMasks masks(g);
  return enumerate(g, w, [&](std::uint64_t r) { return masks.is_k_resolving(r, 2); });
}

OracleResult oracle_min_2nr(const Graph& g, const WeightMap& w) {
  check_size(g, w);
  const PairMasks masks(g);
  return enumerate(g, w, [&](std::uint64_t r) { return masks.is_2nr(r); });
}

OracleResult oracle_min_resolving(const Graph& g, const WeightMap& w) {
  check_size(g, w);
  const PairMasks masks(g);
  return enumerate(g, w, [&](std::uint64_t r) { return masks.is_k_resolving(r, 1); });
}

}  // namespace ftmd
