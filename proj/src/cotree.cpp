#include "ftmd/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace ftmd {

namespace {

std::string describe_witness(const std::optional<std::array<VertexId, 4>>& w) {
  std::string msg = "not a cograph";
  if (w) {
    msg += ": induced P4 " + std::to_string((*w)[0]);
    for (std::size_t i = 1; i < 4; ++i) msg += "-" + std::to_string((*w)[i]);
  }
  return msg;
}

}  // namespace

NotCographError::NotCographError(std::optional<std::array<VertexId, 4>> witness)
    : std::runtime_error(describe_witness(witness)), witness_(witness) {}

std::vector<VertexId> Cotree::leaf_order() const {
  std::vector<VertexId> order;
  order.reserve(leaf_count());
  for (const auto& node : nodes_) {
    if (node.kind == NodeKind::Leaf) order.push_back(node.vertex);
  }
  return order;
}

NodeId CotreeBuilder::leaf(VertexId v) {
  nodes_.push_back({NodeKind::Leaf, 0, 0, v, 1});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CotreeBuilder::make_union(NodeId a, NodeId b) {
  const auto leaves = nodes_.at(a).leaves + nodes_.at(b).leaves;
  nodes_.push_back({NodeKind::Union, a, b, 0, leaves});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CotreeBuilder::make_complement(NodeId a) {
  const auto& child = nodes_.at(a);
  if (child.kind == NodeKind::Leaf) return a;
  if (child.kind == NodeKind::Complement) return child.left;
  nodes_.push_back({NodeKind::Complement, a, 0, 0, child.leaves});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CotreeBuilder::make_join(NodeId a, NodeId b) {
  return make_complement(make_union(make_complement(a), make_complement(b)));
}

Cotree CotreeBuilder::finish(NodeId root) && {
  Cotree out;
  std::vector<NodeId> remap(nodes_.size(), 0);
  std::vector<VertexId> labels;
  // Iterative post-order; the second visit of a node emits it.
  std::vector<std::pair<NodeId, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const CotreeNode& node = nodes_.at(id);
    if (node.kind == NodeKind::Leaf) {
      remap[id] = static_cast<NodeId>(out.nodes_.size());
      out.nodes_.push_back(node);
      labels.push_back(node.vertex);
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      if (node.kind == NodeKind::Union) stack.emplace_back(node.right, false);
      stack.emplace_back(node.left, false);
      continue;
    }
    CotreeNode copy = node;
    copy.left = remap[node.left];
    if (node.kind == NodeKind::Union) copy.right = remap[node.right];
    remap[id] = static_cast<NodeId>(out.nodes_.size());
    out.nodes_.push_back(copy);
  }
  std::sort(labels.begin(), labels.end());
  for (VertexId i = 0; i < labels.size(); ++i) {
    if (labels[i] != i) {
      throw CotreeError("leaf labels are not a permutation of 0..n-1");
    }
  }
  return out;
}

namespace {

// Recursive split on an induced subgraph. Vertex lists are kept sorted.
class Recognizer {
 public:
  explicit Recognizer(const Graph& g)
      : g_(g), mark_(g.vertex_count(), 0), member_(g.vertex_count(), 0) {}

  NodeId build(const std::vector<VertexId>& s) {
    if (s.size() == 1) return builder_.leaf(s.front());

    auto parts = components(s, false);
    if (parts.size() > 1) {
      NodeId acc = build(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = builder_.make_union(acc, build(parts[i]));
      }
      return acc;
    }
    parts = components(s, true);
    if (parts.size() > 1) {
      // G[S] is the join of its co-components.
      NodeId acc = builder_.make_complement(build(parts[0]));
      for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = builder_.make_union(acc, builder_.make_complement(build(parts[i])));
      }
      return builder_.make_complement(acc);
    }
    throw NotCographError(find_induced_p4(induced_witness_graph(s)));
  }

  Cotree finish(NodeId root) && { return std::move(builder_).finish(root); }

 private:
  // Components of G[S] (or of its complement), sorted by smallest member.
  std::vector<std::vector<VertexId>> components(const std::vector<VertexId>& s,
                                                bool in_complement) {
    const std::uint32_t member_stamp = ++stamp_;
    for (VertexId v : s) member_[v] = member_stamp;
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> stack;

    if (!in_complement) {
      ++stamp_;
      for (VertexId start : s) {
        if (mark_[start] == stamp_) continue;
        std::vector<VertexId> comp;
        mark_[start] = stamp_;
        stack.push_back(start);
        while (!stack.empty()) {
          VertexId u = stack.back();
          stack.pop_back();
          comp.push_back(u);
          for (VertexId w : g_.neighbors(u)) {
            if (member_[w] == member_stamp && mark_[w] != stamp_) {
              mark_[w] = stamp_;
              stack.push_back(w);
            }
          }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      return out;
    }

    // Complement BFS over the shrinking list of unvisited vertices.
    std::vector<VertexId> unvisited(s.rbegin(), s.rend());
    while (!unvisited.empty()) {
      std::vector<VertexId> comp;
      stack.push_back(unvisited.back());
      unvisited.pop_back();
      while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        ++stamp_;
        for (VertexId w : g_.neighbors(u)) {
          if (member_[w] == member_stamp) mark_[w] = stamp_;
        }
        std::vector<VertexId> keep;
        for (VertexId w : unvisited) {
          if (mark_[w] == stamp_) {
            keep.push_back(w);
          } else {
            stack.push_back(w);
          }
        }
        unvisited.swap(keep);
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
  }

  // Induced subgraph with original labels preserved: non-members are isolated.
  Graph induced_witness_graph(const std::vector<VertexId>& s) const {
    auto sub = induced_subgraph(g_, s);
    GraphBuilder b(g_.vertex_count());
    for (auto [u, v] : sub.graph.edges()) b.add_edge(sub.to_old[u], sub.to_old[v]);
    return std::move(b).build();
  }

  const Graph& g_;
  CotreeBuilder builder_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> member_;
  std::uint32_t stamp_ = 0;
};

}  // namespace

Cotree build_cotree(const Graph& g) {
  if (g.vertex_count() == 0) throw EmptyGraphError();
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  Recognizer r(g);
  const NodeId root = r.build(all);
  return std::move(r).finish(root);
}

Graph realize(const Cotree& t) {
  const auto nodes = t.nodes();
  const std::size_t count = nodes.size();
  // Leaves of each subtree form a contiguous range of the post-order leaves.
  std::vector<std::uint32_t> first(count, 0);
  std::vector<VertexId> order;
  order.reserve(t.leaf_count());
  for (std::size_t i = 0; i < count; ++i) {
    if (nodes[i].kind == NodeKind::Leaf) {
      first[i] = static_cast<std::uint32_t>(order.size());
      order.push_back(nodes[i].vertex);
    } else {
      first[i] = first[nodes[i].left];
    }
  }
  // Parity of Complement ancestors; parents precede children in reverse order.
  std::vector<std::uint8_t> parity(count, 0);
  GraphBuilder b(t.leaf_count());
  for (std::size_t i = count; i-- > 0;) {
    const auto& node = nodes[i];
    if (node.kind == NodeKind::Complement) {
      parity[node.left] = parity[i] ^ 1;
    } else if (node.kind == NodeKind::Union) {
      parity[node.left] = parity[i];
      parity[node.right] = parity[i];
      if (parity[i]) {
        const auto& l = nodes[node.left];
        const auto& r = nodes[node.right];
        for (std::uint32_t x = 0; x < l.leaves; ++x) {
          for (std::uint32_t y = 0; y < r.leaves; ++y) {
            b.add_edge(order[first[node.left] + x], order[first[node.right] + y]);
          }
        }
      }
    }
  }
  return std::move(b).build();
}

namespace {

// Bounded draw from the raw engine output; std distributions are not
// portable across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

NodeId grow(CotreeBuilder& b, std::mt19937_64& rng, VertexId first,
            std::size_t n) {
  if (n == 1) return b.leaf(first);
  const auto left = static_cast<std::size_t>(1 + draw_below(rng, n - 1));
  const bool wrap = draw_below(rng, 2) == 1;
  const NodeId l = grow(b, rng, first, left);
  const NodeId r = grow(b, rng, first + static_cast<VertexId>(left), n - left);
  const NodeId u = b.make_union(l, r);
  return wrap ? b.make_complement(u) : u;
}

}  // namespace

Cotree random_cotree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw CotreeError("random_cotree needs at least one leaf");
  std::mt19937_64 rng(seed);
  CotreeBuilder b;
  const NodeId root = grow(b, rng, 0, n);
  return std::move(b).finish(root);
}

bool is_normalized(const Cotree& t) {
  for (const auto& node : t.nodes()) {
    if (node.kind == NodeKind::Complement &&
        t.node(node.left).kind != NodeKind::Union) {
      return false;
    }
  }
  return true;
}

std::string to_sexpr(const Cotree& t) {
  // Post-order storage lets us build each node's text from its children.
  const auto nodes = t.nodes();
  std::vector<std::string> text(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    switch (node.kind) {
      case NodeKind::Leaf:
        text[i] = "L" + std::to_string(node.vertex);
        break;
      case NodeKind::Union:
        text[i] = "(U " + text[node.left] + " " + text[node.right] + ")";
        break;
      case NodeKind::Complement:
        text[i] = "(C " + text[node.left] + ")";
        break;
    }
    if (node.kind != NodeKind::Leaf) {
      std::string().swap(text[node.left]);
      if (node.kind == NodeKind::Union) std::string().swap(text[node.right]);
    }
  }
  return text.back();
}

namespace {

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  Cotree parse() {
    const NodeId root = parse_node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return std::move(builder_).finish(root);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw CotreeError("cotree parse error at offset " + std::to_string(pos_) +
                      ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  NodeId parse_node() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == 'L') {
      ++pos_;
      const std::size_t start = pos_;
      std::uint64_t value = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (value > 0xFFFFFFFFu) fail("leaf id too large");
        ++pos_;
      }
      if (pos_ == start) fail("leaf without id");
      return builder_.leaf(static_cast<VertexId>(value));
    }
    expect('(');
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char kind = text_[pos_++];
    NodeId result = 0;
    if (kind == 'U') {
      const NodeId a = parse_node();
      const NodeId b = parse_node();
      result = builder_.make_union(a, b);
    } else if (kind == 'C') {
      const NodeId a = parse_node();
      if (builder_.kind(a) != NodeKind::Union) {
        fail("complement must wrap a union");
      }
      result = builder_.make_complement(a);
    } else {
      fail(std::string("unknown node kind '") + kind + "'");
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  CotreeBuilder builder_;
};

}  // namespace

Cotree parse_sexpr(std::string_view text) { return SexprParser(text).parse(); }

std::optional<std::array<VertexId, 4>> find_induced_p4(const Graph& g) {
  // Middle edge b-c, with a hanging off b only and d off c only, a !~ d.
  for (auto [b, c] : g.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const VertexId x = flip ? c : b;
      const VertexId y = flip ? b : c;
      for (VertexId a : g.neighbors(x)) {
        if (a == y || g.has_edge(a, y)) continue;
        for (VertexId d : g.neighbors(y)) {
          if (d == x || d == a || g.has_edge(d, x) || g.has_edge(a, d)) continue;
          return std::array<VertexId, 4>{a, x, y, d};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ftmd
