#pragma once

#include <cstdint>
#include <stdexcept>

#include "ftmd/graph.hpp"

namespace ftmd {

/// Exhaustive minimum over all vertex subsets.
struct OracleResult {
  double weight = 0.0;
  /// Lexicographically smallest optimal set.
  VertexSet witness;
  /// Number of subsets attaining the optimum.
  std::uint64_t optimal_count = 0;
};

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxVertices = 20;

// All three throw OracleLimitError above kOracleMaxVertices vertices.
OracleResult oracle_min_ft(const Graph& g, const WeightMap& w);
OracleResult oracle_min_2nr(const Graph& g, const WeightMap& w);
OracleResult oracle_min_resolving(const Graph& g, const WeightMap& w);

}  // namespace ftmd
