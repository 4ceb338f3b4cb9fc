#include "ftmd/ftdp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftmd {

namespace {

constexpr std::uint8_t kLowFlags = StateKey::kZeroOut | StateKey::kOneOut |
                                   StateKey::kOneIn | StateKey::kTwoIn;

// Keeps the first cheapest candidate per key.
class Accumulator {
 public:
  explicit Accumulator(std::size_t& ops) : ops_(ops) { slot_.fill(-1); }

  void offer(StateKey key, double weight, Backref from) {
    ++ops_;
    auto& slot = slot_[key.bits];
    if (slot < 0) {
      slot = static_cast<std::int16_t>(entries_.size());
      entries_.push_back({key, weight, from});
    } else if (weight < entries_[static_cast<std::size_t>(slot)].weight) {
      entries_[static_cast<std::size_t>(slot)] = {key, weight, from};
    }
  }

  StateTable finish() && {
    ops_ += entries_.size();
    return StateTable(std::move(entries_));
  }

 private:
  std::array<std::int16_t, 256> slot_;
  std::vector<TableEntry> entries_;
  std::size_t& ops_;
};

DpValue complement_value(const DpValue& value, std::size_t& ops) {
  if (const auto* single = std::get_if<SingleVertex>(&value)) return *single;
  const auto& table = std::get<StateTable>(value);
  std::vector<TableEntry> out;
  out.reserve(table.finite_count());
  for (const auto& e : table.entries()) {
    out.push_back({e.key.complemented(), e.weight, e.from});
  }
  ops += 2 * out.size();
  return StateTable(std::move(out));
}

StateTable leaf_leaf(VertexId v1, VertexId v2, const WeightMap& w,
                     std::size_t& ops) {
  Accumulator acc(ops);
  // R = {v1, v2}: both members see only themselves, and 1 = |R| - 1.
  acc.offer({StateKey::kOneIn | StateKey::kNearIn}, w[v1] + w[v2], {});
  return std::move(acc).finish();
}

StateTable leaf_table(VertexId v1, const StateTable& t2, const WeightMap& w,
                      std::size_t& ops) {
  Accumulator acc(ops);
  const auto entries = t2.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const StateKey k = entries[i].key;
    const auto index = static_cast<std::int32_t>(i);

    // v1 joins R as an isolated member (count 1). |R| grows by one, so the
    // |R''| vertices of the table side become (|R|-1)-vertices. A 0-vertex
    // next to v1 would have h = 1.
    if (!k.has(StateKey::kZeroOut)) {
      std::uint8_t bits = StateKey::kOneIn;
      if (k.has(StateKey::kOneOut)) bits |= StateKey::kOneOut;
      if (k.has(StateKey::kFullOut)) bits |= StateKey::kNearOut;
      if (k.has(StateKey::kFullIn)) bits |= StateKey::kNearIn;
      if (k.has(StateKey::kTwoIn)) bits |= StateKey::kTwoIn;
      acc.offer({bits}, w[v1] + entries[i].weight, {index, -1, true});
    }

    // v1 stays out and is the 0-vertex; every other vertex needs count >= 2.
    if (!k.has(StateKey::kZeroOut | StateKey::kOneOut | StateKey::kOneIn)) {
      acc.offer({static_cast<std::uint8_t>(k.bits | StateKey::kZeroOut)},
                entries[i].weight, {index, -1, false});
    }
  }
  return std::move(acc).finish();
}

// Cheapest entry per low-flag class; the high flags cannot survive a union
// of two sides that each hold at least two members.
std::array<std::int32_t, 16> cheapest_by_low_flags(const StateTable& t,
                                                   std::size_t& ops) {
  std::array<std::int32_t, 16> best;
  best.fill(-1);
  const auto entries = t.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ++ops;
    const std::uint8_t low = entries[i].key.bits & kLowFlags;
    const unsigned cls = (low & 0x7u) | ((low & StateKey::kTwoIn) ? 8u : 0u);
    auto& slot = best[cls];
    if (slot < 0 || entries[i].weight < entries[static_cast<std::size_t>(slot)].weight) {
      slot = static_cast<std::int32_t>(i);
    }
  }
  return best;
}

StateTable table_table(const StateTable& t1, const StateTable& t2,
                       std::size_t& ops) {
  const auto best1 = cheapest_by_low_flags(t1, ops);
  const auto best2 = cheapest_by_low_flags(t2, ops);
  Accumulator acc(ops);
  for (std::int32_t i1 : best1) {
    if (i1 < 0) continue;
    const auto& e1 = t1.entries()[static_cast<std::size_t>(i1)];
    const bool zero1 = e1.key.has(StateKey::kZeroOut);
    const bool one1 = e1.key.has(StateKey::kOneOut | StateKey::kOneIn);
    for (std::int32_t i2 : best2) {
      if (i2 < 0) continue;
      const auto& e2 = t2.entries()[static_cast<std::size_t>(i2)];
      const bool zero2 = e2.key.has(StateKey::kZeroOut);
      const bool one2 = e2.key.has(StateKey::kOneOut | StateKey::kOneIn);
      // Across the union h(u, v) = |N[u] & R| + |N[v] & R|.
      if ((zero1 && zero2) || (zero1 && one2) || (one1 && zero2)) {
        ++ops;
        continue;
      }
      const auto bits =
          static_cast<std::uint8_t>((e1.key.bits | e2.key.bits) & kLowFlags);
      acc.offer({bits}, e1.weight + e2.weight, {i1, i2, false});
    }
  }
  return std::move(acc).finish();
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

StateTable::StateTable(std::vector<TableEntry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const TableEntry& x, const TableEntry& y) {
              return x.key.rank() < y.key.rank();
            });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1].key == entries_[i].key) {
      throw std::invalid_argument("duplicate StateKey in table");
    }
  }
}

std::optional<std::size_t> StateTable::find(StateKey key) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].key == key) return i;
  }
  return std::nullopt;
}

std::optional<double> StateTable::weight(StateKey key) const {
  if (auto i = find(key)) return entries_[*i].weight;
  return std::nullopt;
}

std::optional<double> StateTable::projected_weight(StateIndex index) const {
  std::optional<double> best;
  for (const auto& e : entries_) {
    if (e.key.project() == index && (!best || e.weight < *best)) best = e.weight;
  }
  return best;
}

std::array<std::optional<double>, 16> StateTable::project() const {
  std::array<std::optional<double>, 16> out;
  for (unsigned i = 0; i < 16; ++i) {
    out[i] = projected_weight(StateIndex::from_ordinal(i));
  }
  return out;
}

DpValue dp_complement(const DpValue& value) {
  std::size_t ops = 0;
  return complement_value(value, ops);
}

StateTable dp_union_leaf_leaf(VertexId v1, VertexId v2, const WeightMap& w) {
  std::size_t ops = 0;
  return leaf_leaf(v1, v2, w, ops);
}

StateTable dp_union_leaf_table(VertexId v1, const StateTable& t2,
                               const WeightMap& w) {
  std::size_t ops = 0;
  return leaf_table(v1, t2, w, ops);
}

StateTable dp_union_table_table(const StateTable& t1, const StateTable& t2) {
  std::size_t ops = 0;
  return table_table(t1, t2, ops);
}

DpRun dp_run(const Cotree& t, const WeightMap& w) {
  if (w.size() != t.leaf_count()) {
    throw GraphError("weight map size does not match the cotree's leaf count");
  }
  DpRun run;
  run.tree_ = &t;
  const auto nodes = t.nodes();
  run.values_.reserve(nodes.size());
  for (const auto& node : nodes) {
    std::size_t ops = 0;
    switch (node.kind) {
      case NodeKind::Leaf:
        run.values_.emplace_back(SingleVertex{node.vertex});
        break;
      case NodeKind::Complement:
        run.values_.push_back(complement_value(run.values_[node.left], ops));
        break;
      case NodeKind::Union: {
        const DpValue& l = run.values_[node.left];
        const DpValue& r = run.values_[node.right];
        const auto* ls = std::get_if<SingleVertex>(&l);
        const auto* rs = std::get_if<SingleVertex>(&r);
        StateTable table;
        if (ls && rs) {
          table = leaf_leaf(ls->vertex, rs->vertex, w, ops);
        } else if (ls) {
          table = leaf_table(ls->vertex, std::get<StateTable>(r), w, ops);
        } else if (rs) {
          table = leaf_table(rs->vertex, std::get<StateTable>(l), w, ops);
        } else {
          table = table_table(std::get<StateTable>(l), std::get<StateTable>(r), ops);
        }
        run.values_.emplace_back(std::move(table));
        break;
      }
    }
    run.stats_.nodes += 1;
    run.stats_.entry_ops += ops;
    run.stats_.max_entry_ops_per_node =
        std::max(run.stats_.max_entry_ops_per_node, ops);
  }
  return run;
}

VertexSet DpRun::reconstruct(NodeId id, std::size_t entry) const {
  VertexSet out;
  std::vector<std::pair<NodeId, std::size_t>> stack{{id, entry}};
  while (!stack.empty()) {
    const auto [node_id, index] = stack.back();
    stack.pop_back();
    const CotreeNode& node = tree_->node(node_id);
    const auto& table = std::get<StateTable>(values_.at(node_id));
    const TableEntry& e = table.entries()[index];

    if (node.kind == NodeKind::Complement) {
      const auto& child = std::get<StateTable>(values_.at(node.left));
      const auto child_index = child.find(e.key.complemented());
      if (!child_index) throw std::logic_error("broken complement record");
      stack.emplace_back(node.left, *child_index);
      continue;
    }

    const auto* ls = std::get_if<SingleVertex>(&values_.at(node.left));
    const auto* rs = std::get_if<SingleVertex>(&values_.at(node.right));
    if (ls && rs) {
      out.push_back(ls->vertex);
      out.push_back(rs->vertex);
    } else if (ls || rs) {
      if (e.from.leaf_in) out.push_back(ls ? ls->vertex : rs->vertex);
      stack.emplace_back(ls ? node.right : node.left,
                         static_cast<std::size_t>(e.from.first));
    } else {
      stack.emplace_back(node.left, static_cast<std::size_t>(e.from.first));
      stack.emplace_back(node.right, static_cast<std::size_t>(e.from.second));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConnectedOptimum extract_connected_min(const DpRun& run) {
  const auto* table = std::get_if<StateTable>(&run.root());
  if (!table) throw std::logic_error("root of a single vertex has no table");
  if (table->empty()) throw std::logic_error("root table has no finite entry");

  const auto entries = table->entries();
  double best = entries.front().weight;
  for (const auto& e : entries) best = std::min(best, e.weight);

  std::optional<ConnectedOptimum> chosen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].weight != best) continue;
    // Entries are in ascending projected order, so stop after the first
    // projected state that attains the minimum.
    if (chosen && chosen->key.project() != entries[i].key.project()) break;
    VertexSet set = run.reconstruct(run.tree().root(), i);
    if (!chosen || lex_less(set, chosen->set)) {
      chosen = ConnectedOptimum{best, std::move(set), entries[i].key};
    }
  }
  return *chosen;
}

Solution solve(const Graph& g, const WeightMap& w) {
  if (g.vertex_count() == 0) throw EmptyGraphError();
  if (w.size() != g.vertex_count()) {
    throw GraphError("weight map size does not match the vertex count");
  }
  const auto components = connected_components(g);
  const auto isolated = static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(),
                    [](const VertexSet& c) { return c.size() == 1; }));

  Solution sol;
  for (const auto& comp : components) {
    ComponentSolution part;
    part.vertices = comp;
    if (comp.size() == 1) {
      if (isolated >= 2) {
        part.kind = ComponentSolution::Kind::IsolatedIncluded;
        part.chosen = comp;
        part.weight = w[comp.front()];
      } else {
        part.kind = ComponentSolution::Kind::IsolatedExcluded;
      }
    } else {
      const auto sub = induced_subgraph(g, comp);
      std::optional<Cotree> tree;
      try {
        tree.emplace(build_cotree(sub.graph));
      } catch (const NotCographError& e) {
        auto witness = e.witness();
        if (witness) {
          for (auto& v : *witness) v = sub.to_old[v];
        }
        throw NotCographError(witness);
      }
      std::vector<double> local(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i) local[i] = w[comp[i]];
      const WeightMap sub_weights(std::move(local));
      const DpRun run = dp_run(*tree, sub_weights);
      const ConnectedOptimum best = extract_connected_min(run);
      part.weight = best.weight;
      for (VertexId v : best.set) part.chosen.push_back(sub.to_old[v]);
    }
    sol.weight += part.weight;
    sol.set.insert(sol.set.end(), part.chosen.begin(), part.chosen.end());
    sol.components.push_back(std::move(part));
  }
  std::sort(sol.set.begin(), sol.set.end());
  return sol;
}

}  // namespace ftmd
