#include "resobdd/quasi_reduced.hpp"

#include <functional>
#include <unordered_map>

namespace resobdd {

Diagram build_qr(const Diagram& d, std::size_t bucket_count) {
  const std::uint32_t n = d.num_vars();
  auto store = std::make_shared<DiagramStore>(n, ReductionMode::KeepRedundant, bucket_count);
  std::unordered_map<std::uint64_t, NodeId> memo;
  // qr(id, level): node for the function of `id` seen from `level`.
  std::function<NodeId(NodeId, Level)> qr = [&](NodeId id, Level level) -> NodeId {
    if (level == n) {
      if (!id.is_terminal()) throw StructuralError("build_qr: node below the last level");
      return id;
    }
    std::uint64_t key = (std::uint64_t{id.value} << 32) | level;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    NodeId result;
    if (d.level(id) > level) {
      NodeId below = qr(id, level + 1);
      result = store->mk_node(level, below, below);
    } else {
      const Node node = d.node(id);
      if (node.index != level) throw StructuralError("build_qr: input is not ordered");
      NodeId lo = qr(node.lo, level + 1);
      NodeId hi = qr(node.hi, level + 1);
      result = store->mk_node(level, lo, hi);
    }
    memo.emplace(key, result);
    return result;
  };
  NodeId root = qr(d.root(), 0);
  return Diagram(std::move(store), root);
}

Diagram pad_chains(const Diagram& d, FaultOverlay* overlay, RepairStats* stats) {
  LevelReader level(d, overlay, stats);
  auto store = std::make_shared<DiagramStore>(d.num_vars(), ReductionMode::KeepRedundant,
                                              d.store().table().bucket_count());
  // Chain from `from` (exclusive) down to the copy of `child`.
  auto chain = [&](NodeId copied_child, Level child_level, Level from) {
    NodeId cur = copied_child;
    for (Level l = child_level; l-- > from + 1;) cur = store->add_node(l, cur, cur);
    return cur;
  };
  std::unordered_map<NodeId, NodeId> map{{kTerm0, kTerm0}, {kTerm1, kTerm1}};
  for (NodeId id : postorder(d)) {
    const Node n = d.node(id);
    Level l = level(id);
    NodeId lo = chain(map.at(n.lo), level(n.lo), l);
    NodeId hi = chain(map.at(n.hi), level(n.hi), l);
    map[id] = store->add_node(l, lo, hi);
  }
  // Pad above the root so it sits on level 0.
  NodeId root = map.at(d.root());
  for (Level l = level(d.root()); l-- > 0;) root = store->add_node(l, root, root);
  return Diagram(std::move(store), root);
}

Diagram merge_quadratic(const Diagram& d, FaultOverlay* overlay, RepairStats* stats) {
  LevelReader level(d, overlay, stats);
  const std::uint32_t n = d.num_vars();
  std::vector<std::vector<NodeId>> by_level(n);
  for (NodeId id : preorder(d)) {
    const Node node = d.node(id);
    Level l = level(id);
    if (level(node.lo) != l + 1 || level(node.hi) != l + 1) {
      throw ContractViolation("merge_quadratic: edge skips a level; pad chains first");
    }
    by_level[l].push_back(id);
  }

  std::vector<NodeId> rep(d.store().arena_size());
  for (std::size_t s = 0; s < rep.size(); ++s) rep[s] = id_of_slot(s);
  auto rep_of = [&](NodeId id) { return id.is_terminal() ? id : rep[slot_of(id)]; };

  for (Level l = n; l-- > 0;) {
    std::vector<NodeId> kept;
    for (NodeId id : by_level[l]) {
      const Node node = d.node(id);
      NodeId lo = rep_of(node.lo);
      NodeId hi = rep_of(node.hi);
      NodeId twin = kNoNode;
      for (NodeId k : kept) {
        const Node other = d.node(k);
        if (rep_of(other.lo) == lo && rep_of(other.hi) == hi) {
          twin = k;
          break;
        }
      }
      if (twin.is_null()) {
        kept.push_back(id);
      } else {
        rep[slot_of(id)] = twin;
      }
    }
  }
  return rebuild(d, rep_of, ReductionMode::KeepRedundant, d.store().table().bucket_count());
}

bool has_level_discipline(const Diagram& d) {
  if (d.level(d.root()) != 0) return false;
  for (NodeId id : preorder(d)) {
    const Node& node = d.node(id);
    if (d.level(node.lo) != node.index + 1 || d.level(node.hi) != node.index + 1) return false;
  }
  return true;
}

}  // namespace resobdd
