#include "resobdd/fault_lab.hpp"

#include <algorithm>
#include <limits>

namespace resobdd {

ParentLevels::ParentLevels(const Diagram& d, const FaultOverlay* overlay)
    : max_(d.store().arena_size(), -1) {
  for (NodeId id : preorder(d)) {
    if (overlay && overlay->index_corrupt(id)) continue;
    const Node& n = d.node(id);
    for (NodeId child : {n.lo, n.hi}) {
      if (child.is_terminal()) continue;
      int& m = max_[slot_of(child)];
      m = std::max(m, static_cast<int>(n.index));
    }
  }
}

int ParentLevels::max_parent_level(NodeId id) const {
  return id.is_terminal() ? -1 : max_.at(slot_of(id));
}

NodeRange node_range(const Diagram& d, const ParentLevels& parents, NodeId node,
                     const FaultOverlay* overlay) {
  const int n = static_cast<int>(d.num_vars());
  const Node& nd = d.node(node);
  int min_child = std::numeric_limits<int>::max();
  for (NodeId child : {nd.lo, nd.hi}) {
    if (child.is_terminal()) {
      min_child = std::min(min_child, n);
    } else if (!(overlay && overlay->index_corrupt(child))) {
      min_child = std::min(min_child, static_cast<int>(d.node(child).index));
    }
  }
  if (min_child == std::numeric_limits<int>::max()) min_child = n;
  return NodeRange{parents.max_parent_level(node) + 1, min_child - 1};
}

NodeRange node_range(const Diagram& d, NodeId node, const FaultOverlay* overlay) {
  return node_range(d, ParentLevels(d, overlay), node, overlay);
}

int reconstruct_index_ut(const Diagram& d, NodeId node, const NodeRange& range) {
  const Node& nd = d.node(node);
  const UniqueTable& table = d.store().table();
  for (int l = range.upper; l >= range.lower; --l) {
    if (l < 0 || l >= static_cast<int>(d.num_vars())) continue;
    if (table.chain_contains(static_cast<Level>(l), nd.lo, nd.hi, node)) return l;
  }
  return -1;
}

int reconstruct_index_ut(const Diagram& d, NodeId node, const FaultOverlay* overlay) {
  return reconstruct_index_ut(d, node, node_range(d, node, overlay));
}

std::size_t CostReport::cost(NodeId id) const {
  for (const auto& [node, c] : per_node) {
    if (node == id) return c;
  }
  throw UsageError("cost_report: node not reachable");
}

CostReport cost_report(const Diagram& d) {
  CostReport report;
  ParentLevels parents(d);
  for (NodeId id : preorder(d)) {
    std::size_t c = node_range(d, parents, id).size();
    report.per_node.emplace_back(id, c);
    report.total += c;
  }
  return report;
}

MergeDelta check_merge_delta(const Diagram& d, const std::vector<NodeId>& group) {
  if (group.size() < 2) throw UsageError("merge needs at least two nodes");
  const Node first = d.node(group.front());
  for (NodeId id : group) {
    const Node& n = d.node(id);
    if (n.index != first.index || n.lo != first.lo || n.hi != first.hi) {
      throw UsageError("merge rule not applicable: nodes differ");
    }
    if (std::count(group.begin(), group.end(), id) != 1) {
      throw UsageError("merge rule not applicable: repeated node");
    }
  }
  ParentLevels parents(d);
  NodeId kept = group.front();
  for (NodeId id : group) {
    if (parents.max_parent_level(id) > parents.max_parent_level(kept)) kept = id;
  }

  CostReport before = cost_report(d);
  long long predicted = 0;
  for (NodeId id : group) {
    if (id != kept) predicted -= static_cast<long long>(before.cost(id));
  }
  auto redirect = [&](NodeId id) {
    return std::find(group.begin(), group.end(), id) != group.end() ? kept : id;
  };
  Diagram result = rebuild(d, redirect, d.store().mode(), d.store().table().bucket_count());
  CostReport after = cost_report(result);
  long long measured = static_cast<long long>(after.total) - static_cast<long long>(before.total);
  return MergeDelta{std::move(result), kept, measured, predicted};
}

DeleteDelta check_delete_delta(const Diagram& d, NodeId node) {
  const Node target = d.node(node);
  if (!target.redundant()) throw UsageError("deletion rule not applicable: node not redundant");

  ParentLevels parents(d);
  DeletionBound b;
  b.l = static_cast<int>(target.index);
  const NodeId child = target.lo;
  const int child_level = static_cast<int>(d.level(child));
  b.k = child_level - b.l;

  if (!child.is_terminal()) {
    const Node& c = d.node(child);
    b.z = static_cast<int>(std::min(d.level(c.lo), d.level(c.hi))) - child_level;
  }

  int deepest_other_parent = -1;
  for (NodeId id : preorder(d)) {
    const Node& p = d.node(id);
    const bool to_target = p.lo == node || p.hi == node;
    const bool to_child = p.lo == child || p.hi == child;
    if (to_child && id != node) {
      deepest_other_parent = std::max(deepest_other_parent, static_cast<int>(p.index));
    }
    if (!to_target) continue;
    ++b.r;
    const int pl = static_cast<int>(p.index);
    b.g.push_back(b.l - pl);
    b.h.push_back(pl - parents.max_parent_level(id));
    NodeId other = p.lo == node ? p.hi : p.lo;
    b.j.push_back(static_cast<int>(d.level(other)) - pl);
  }
  if (!child.is_terminal() && deepest_other_parent >= 0) {
    b.q = child_level - deepest_other_parent;
  }
  // The root behaves as if its parent sat on level -1.
  const int min_g = b.g.empty() ? b.l + 1 : *std::min_element(b.g.begin(), b.g.end());
  b.lower = -static_cast<long long>(min_g) - b.k - 1;
  b.upper = static_cast<long long>(b.k) * (b.r - 1) + 1;

  CostReport before = cost_report(d);
  auto redirect = [&](NodeId id) { return id == node ? child : id; };
  Diagram result = rebuild(d, redirect, d.store().mode(), d.store().table().bucket_count());
  CostReport after = cost_report(result);
  long long measured = static_cast<long long>(after.total) - static_cast<long long>(before.total);
  return DeleteDelta{std::move(result), measured, std::move(b)};
}

}  // namespace resobdd
