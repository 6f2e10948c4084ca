#include "resobdd/index_resilient.hpp"

namespace resobdd {

std::optional<std::uint32_t> NumPMap::at(NodeId id) const {
  if (id.is_terminal() || slot_of(id) >= counts_.size()) return std::nullopt;
  std::uint32_t c = counts_[slot_of(id)];
  if (c == kUndefined) return std::nullopt;
  return c;
}

void NumPMap::define(NodeId id) {
  if (counts_[slot_of(id)] == kUndefined) counts_[slot_of(id)] = 0;
}

void NumPMap::increment(NodeId id) {
  if (counts_[slot_of(id)] == kUndefined) throw UsageError("numP of a non-redundant node");
  ++counts_[slot_of(id)];
}

namespace {

bool redundant(const Diagram& d, NodeId id) {
  return !id.is_terminal() && d.node(id).redundant();
}

}  // namespace

NumPMap compute_numP(const Diagram& d, const LevelReader& level) {
  NumPMap numP(d.store().arena_size());
  const auto nodes = preorder(d);
  for (NodeId id : nodes) {
    if (redundant(d, id)) numP.define(id);
  }
  for (NodeId parent : nodes) {
    const Node p = d.node(parent);
    if (p.redundant()) {
      // Both children are the same redundant node: counted once.
      if (redundant(d, p.hi)) numP.increment(p.hi);
      continue;
    }
    const Level below = level(parent) + 1;
    const bool both_redundant = redundant(d, p.lo) && redundant(d, p.hi);
    if (redundant(d, p.hi) && (both_redundant || level(p.lo) > below)) numP.increment(p.hi);
    if (redundant(d, p.lo) && level(p.hi) > below) numP.increment(p.lo);
  }
  return numP;
}

NumPMap compute_numP(const Diagram& d) { return compute_numP(d, LevelReader(d)); }

ChainPlan find_chains(const Diagram& d, const NumPMap& numP, const LevelReader& level) {
  ChainPlan plan;
  plan.to_remove.assign(d.store().arena_size(), 0);

  std::vector<std::vector<NodeId>> by_level(d.num_vars());
  for (NodeId id : preorder(d)) by_level.at(level(id)).push_back(id);

  for (const auto& nodes : by_level) {
    for (NodeId id : nodes) {
      if (plan.flagged(id) || !redundant(d, id) || numP.at(id) != 0u) continue;
      Chain chain{id, {}, kNoNode};
      NodeId cur = id;
      while (true) {
        plan.to_remove[slot_of(cur)] = 1;
        cur = d.node(cur).lo;
        if (cur.is_terminal() || !d.node(cur).redundant() || numP.at(cur).value_or(0) > 1) {
          break;
        }
        chain.members.push_back(cur);
      }
      chain.child = cur;
      plan.chains.push_back(std::move(chain));
    }
  }
  return plan;
}

ChainPlan find_chains(const Diagram& d, const NumPMap& numP) {
  return find_chains(d, numP, LevelReader(d));
}

Diagram remove_flagged(const Diagram& d, const std::vector<char>& flags) {
  auto skip = [&](NodeId id) {
    while (!id.is_terminal() && flags[slot_of(id)]) id = d.node(id).lo;
    return id;
  };
  return rebuild(d, skip, ReductionMode::KeepRedundant, d.store().table().bucket_count());
}

Diagram ir_reduce(const Diagram& d, FaultOverlay* overlay, RepairStats* stats) {
  LevelReader level(d, overlay, stats);
  // Touch every index once so corrupted ones are repaired before the
  // structural checks below read them.
  for (NodeId id : preorder(d)) (void)level(id);
  if (!mergeable_groups(d).empty()) {
    throw ContractViolation("ir_reduce: input has mergeable nodes");
  }
  NumPMap numP = compute_numP(d, level);
  ChainPlan plan = find_chains(d, numP, level);
  return remove_flagged(d, plan.to_remove);
}

bool is_index_resilient(const Diagram& d) {
  if (!mergeable_groups(d).empty()) return false;
  for (NodeId id : preorder(d)) {
    const Node& n = d.node(id);
    if (d.level(n.lo) != n.index + 1 && d.level(n.hi) != n.index + 1) return false;
  }
  return true;
}

bool is_ir_reduced(const Diagram& d) {
  if (!is_index_resilient(d)) return false;
  NumPMap numP = compute_numP(d);
  for (NodeId id : preorder(d)) {
    if (numP.at(id) == 0u) return false;
  }
  return true;
}

}  // namespace resobdd
