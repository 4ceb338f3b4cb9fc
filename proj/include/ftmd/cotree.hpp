#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ftmd/graph.hpp"

namespace ftmd {

enum class NodeKind : std::uint8_t { Leaf, Union, Complement };

using NodeId = std::uint32_t;

struct CotreeNode {
  NodeKind kind = NodeKind::Leaf;
  NodeId left = 0;   // Union: first child; Complement: the child
  NodeId right = 0;  // Union: second child
  VertexId vertex = 0;  // Leaf only
  std::uint32_t leaves = 1;

  friend bool operator==(const CotreeNode&, const CotreeNode&) = default;
};

class CotreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyGraphError : public std::runtime_error {
 public:
  EmptyGraphError() : std::runtime_error("graph has no vertices") {}
};

/// Raised by build_cotree. The witness, when present, lists the vertices of an
/// induced P4 in path order.
class NotCographError : public std::runtime_error {
 public:
  explicit NotCographError(std::optional<std::array<VertexId, 4>> witness);

  const std::optional<std::array<VertexId, 4>>& witness() const {
    return witness_;
  }

 private:
  std::optional<std::array<VertexId, 4>> witness_;
};

/// Union/complement expression tree of a cograph.
///
/// Nodes are stored in post-order (children before parents, root last), so a
/// forward sweep over nodes() is a valid bottom-up evaluation order.
///
/// Normalized form: every Union has two children, every Complement has a
/// Union child (no Complement over Complement, no Complement over Leaf), and
/// the leaf labels are exactly 0..leaf_count()-1.
class Cotree {
 public:
  NodeId root() const { return static_cast<NodeId>(nodes_.size() - 1); }
  const CotreeNode& node(NodeId id) const { return nodes_.at(id); }
  std::span<const CotreeNode> nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const { return nodes_.back().leaves; }

  /// Leaf labels in left-to-right order.
  std::vector<VertexId> leaf_order() const;

  friend bool operator==(const Cotree&, const Cotree&) = default;

 private:
  std::vector<CotreeNode> nodes_;
  friend class CotreeBuilder;
};

/// Assembles a cotree bottom-up. make_complement collapses double complements
/// and complements of single leaves, so every finished tree is normalized.
class CotreeBuilder {
 public:
  NodeId leaf(VertexId v);
  NodeId make_union(NodeId a, NodeId b);
  NodeId make_complement(NodeId a);
  /// Complement(Union(Complement(a), Complement(b))), normalized.
  NodeId make_join(NodeId a, NodeId b);

  std::size_t leaves(NodeId id) const { return nodes_.at(id).leaves; }
  NodeKind kind(NodeId id) const { return nodes_.at(id).kind; }

  /// Keeps only nodes reachable from `root`, in post-order. Throws CotreeError
  /// when the leaf labels are not a permutation of 0..n-1.
  Cotree finish(NodeId root) &&;

 private:
  std::vector<CotreeNode> nodes_;
};

/// Recognizes a cograph by recursive connectivity / co-connectivity splits.
/// Components are chained as left-deep unions in ascending order of their
/// smallest vertex. Throws EmptyGraphError or NotCographError.
Cotree build_cotree(const Graph& g);

/// The graph a cotree denotes; leaf labels become vertex ids.
Graph realize(const Cotree& t);

/// Deterministic random normalized cotree with leaves labelled 0..n-1 left to
/// right. Each Union is wrapped in a Complement with probability 1/2.
Cotree random_cotree(std::size_t n, std::uint64_t seed);

bool is_normalized(const Cotree& t);

/// `L<id>` | `(U <t> <t>)` | `(C <t>)`, single spaces.
std::string to_sexpr(const Cotree& t);

/// Accepts arbitrary whitespace. Rejects non-normalized trees.
Cotree parse_sexpr(std::string_view text);

/// Brute-force search for an induced P4, in path order.
std::optional<std::array<VertexId, 4>> find_induced_p4(const Graph& g);

}  // namespace ftmd
