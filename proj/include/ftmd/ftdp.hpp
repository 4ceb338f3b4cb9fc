#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ftmd/cotree.hpp"
#include "ftmd/graph.hpp"

namespace ftmd {

/// The four existence flags of a 2-neighbourhood-resolving set R: whether some
/// vertex has 0, 1, |R|-1 or |R| members of R in its closed neighbourhood.
struct StateIndex {
  bool a = false;  // 0-vertex
  bool b = false;  // 1-vertex
  bool c = false;  // (|R|-1)-vertex
  bool d = false;  // |R|-vertex

  /// a b c d read as a 4-bit binary number; lexicographic order.
  constexpr unsigned ordinal() const {
    return (a ? 8u : 0u) | (b ? 4u : 0u) | (c ? 2u : 0u) | (d ? 1u : 0u);
  }
  static constexpr StateIndex from_ordinal(unsigned i) {
    return {(i & 8u) != 0, (i & 4u) != 0, (i & 2u) != 0, (i & 1u) != 0};
  }

  friend constexpr bool operator==(StateIndex, StateIndex) = default;
};

/// DP state: the StateIndex flags split by whether the witnessing vertex is a
/// member of R, plus members with exactly two members of R in their closed
/// neighbourhood.
///
/// Complementing a graph maps a closed count k to |R| - k for a non-member and
/// to |R| + 1 - k for a member, so the membership split is what makes the
/// complement step a fixed permutation of flags:
///
///   zero_out <-> full_out      one_out <-> near_out
///   one_in   <-> full_in       near_in <-> two_in
struct StateKey {
  static constexpr std::uint8_t kZeroOut = 1u << 0;  // non-member, count 0
  static constexpr std::uint8_t kOneOut = 1u << 1;   // non-member, count 1
  static constexpr std::uint8_t kOneIn = 1u << 2;    // member, count 1
  static constexpr std::uint8_t kNearOut = 1u << 3;  // non-member, |R|-1
  static constexpr std::uint8_t kNearIn = 1u << 4;   // member, |R|-1
  static constexpr std::uint8_t kFullOut = 1u << 5;  // non-member, |R|
  static constexpr std::uint8_t kFullIn = 1u << 6;   // member, |R|
  static constexpr std::uint8_t kTwoIn = 1u << 7;    // member, count 2

  std::uint8_t bits = 0;

  constexpr bool has(std::uint8_t flag) const { return (bits & flag) != 0; }

  constexpr StateIndex project() const {
    return {has(kZeroOut), has(kOneOut | kOneIn), has(kNearOut | kNearIn),
            has(kFullOut | kFullIn)};
  }

  constexpr StateKey complemented() const {
    std::uint8_t out = 0;
    auto swap = [&](std::uint8_t x, std::uint8_t y) {
      if (has(x)) out |= y;
      if (has(y)) out |= x;
    };
    swap(kZeroOut, kFullOut);
    swap(kOneOut, kNearOut);
    swap(kOneIn, kFullIn);
    swap(kNearIn, kTwoIn);
    return {out};
  }

  /// Ordered by projected ordinal first, then by raw bits.
  constexpr unsigned rank() const { return project().ordinal() << 8 | bits; }

  friend constexpr bool operator==(StateKey, StateKey) = default;
};

/// How a table entry was obtained from the child values.
/// Complement: `first` is the child's entry. Union of a single vertex and a
/// table: `first` is the table's entry and `leaf_in` says whether the single
/// vertex was added. Union of two tables: `first`/`second` index the left and
/// right child tables. Union of two single vertices: both are members.
struct Backref {
  std::int32_t first = -1;
  std::int32_t second = -1;
  bool leaf_in = false;

  friend bool operator==(const Backref&, const Backref&) = default;
};

struct TableEntry {
  StateKey key;
  double weight = 0.0;
  Backref from;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Minimum weights of 2-neighbourhood-resolving sets of one cotree node, one
/// per reachable StateKey. Keys without an entry are infeasible.
class StateTable {
 public:
  StateTable() = default;
  /// Entries must have distinct keys; they are stored in ascending rank().
  explicit StateTable(std::vector<TableEntry> entries);

  std::span<const TableEntry> entries() const { return entries_; }
  std::size_t finite_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::optional<double> weight(StateKey key) const;
  /// Index into entries(), or nullopt.
  std::optional<std::size_t> find(StateKey key) const;

  /// Minimum over all keys projecting onto `index`.
  std::optional<double> projected_weight(StateIndex index) const;
  /// The 16-entry view indexed by StateIndex::ordinal().
  std::array<std::optional<double>, 16> project() const;

  friend bool operator==(const StateTable&, const StateTable&) = default;

 private:
  std::vector<TableEntry> entries_;
};

struct SingleVertex {
  VertexId vertex = 0;
  friend bool operator==(const SingleVertex&, const SingleVertex&) = default;
};

/// A one-leaf subtree has no table; everything larger has one.
using DpValue = std::variant<SingleVertex, StateTable>;

DpValue dp_complement(const DpValue& value);

StateTable dp_union_leaf_leaf(VertexId v1, VertexId v2, const WeightMap& w);

/// Same table whichever side of the union the single vertex is on.
StateTable dp_union_leaf_table(VertexId v1, const StateTable& t2,
                               const WeightMap& w);

StateTable dp_union_table_table(const StateTable& t1, const StateTable& t2);

/// Upper bound on table-entry reads, writes and pair combinations per node.
inline constexpr std::size_t kMaxEntryOpsPerNode = 1024;

struct DpStats {
  std::size_t nodes = 0;
  std::size_t entry_ops = 0;
  std::size_t max_entry_ops_per_node = 0;
};

/// Values for every node of a cotree, kept for reconstruction.
class DpRun {
 public:
  const Cotree& tree() const { return *tree_; }
  const DpValue& value(NodeId id) const { return values_.at(id); }
  const DpValue& root() const { return values_.back(); }
  const DpStats& stats() const { return stats_; }

  /// The vertex set behind entry `entry` of node `id`'s table, sorted.
  VertexSet reconstruct(NodeId id, std::size_t entry) const;

 private:
  const Cotree* tree_ = nullptr;
  std::vector<DpValue> values_;
  DpStats stats_;

  friend DpRun dp_run(const Cotree& t, const WeightMap& w);
};

/// Bottom-up evaluation in the cotree's post-order. The run refers to `t`,
/// which must outlive it.
DpRun dp_run(const Cotree& t, const WeightMap& w);

struct ConnectedOptimum {
  double weight = 0.0;
  VertexSet set;
  StateKey key;
};

/// Cheapest entry of the root table. Ties go to the smallest projected
/// StateIndex, then to the lexicographically smallest vertex set. Throws
/// std::logic_error when the root is a single vertex or the table is empty.
ConnectedOptimum extract_connected_min(const DpRun& run);

struct ComponentSolution {
  enum class Kind { Solved, IsolatedIncluded, IsolatedExcluded };

  VertexSet vertices;
  Kind kind = Kind::Solved;
  double weight = 0.0;
  VertexSet chosen;
};

struct Solution {
  double weight = 0.0;
  VertexSet set;
  std::vector<ComponentSolution> components;
};

/// Minimum-weight fault-tolerant resolving set of a cograph. Components with
/// at least two vertices are solved on their cotrees; isolated vertices are
/// all taken when there are at least two of them and dropped when there is
/// exactly one. Throws EmptyGraphError, NotCographError or GraphError (weight
/// map of the wrong size).
Solution solve(const Graph& g, const WeightMap& w);

}  // namespace ftmd
