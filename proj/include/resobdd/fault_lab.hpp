#pragma once

#include <cstdint>
#include <vector>

#include "resobdd/diagram.hpp"
#include "resobdd/fault.hpp"

namespace resobdd {

/// Highest level among the parents of every reachable node, ignoring parents
/// whose index is flagged corrupt. -1 means "no usable parent".
class ParentLevels {
 public:
  explicit ParentLevels(const Diagram& d, const FaultOverlay* overlay = nullptr);
  [[nodiscard]] int max_parent_level(NodeId id) const;

 private:
  std::vector<int> max_;
};

/// Candidate levels [lower, upper] for a node: one below the deepest parent
/// down to one above the shallowest child.
struct NodeRange {
  int lower = 0;
  int upper = -1;
  [[nodiscard]] std::size_t size() const {
    return upper >= lower ? static_cast<std::size_t>(upper - lower + 1) : 0;
  }
  [[nodiscard]] bool contains(int level) const { return lower <= level && level <= upper; }
};

/// Range of `node` built from uncorrupted neighbour indices only. If every
/// parent (child) is unusable the bound widens to 0 (n - 1).
[[nodiscard]] NodeRange node_range(const Diagram& d, const ParentLevels& parents, NodeId node,
                                   const FaultOverlay* overlay = nullptr);
[[nodiscard]] NodeRange node_range(const Diagram& d, NodeId node,
                                   const FaultOverlay* overlay = nullptr);

/// Index recovery through a safe unique table: scans the range from the
/// upper bound down, probing subtable l at bucket hash(lo, hi) for the
/// node's own address. Returns -1 when no level matches (more than one fault
/// present); callers may retry with a widened range.
[[nodiscard]] int reconstruct_index_ut(const Diagram& d, NodeId node, const NodeRange& range);
[[nodiscard]] int reconstruct_index_ut(const Diagram& d, NodeId node,
                                       const FaultOverlay* overlay = nullptr);

struct CostReport {
  std::vector<std::pair<NodeId, std::size_t>> per_node;  ///< preorder
  std::size_t total = 0;                                 ///< C_t
  [[nodiscard]] double mean() const {                    ///< C_m
    return per_node.empty() ? 0.0 : static_cast<double>(total) / per_node.size();
  }
  [[nodiscard]] std::size_t cost(NodeId id) const;
};

[[nodiscard]] CostReport cost_report(const Diagram& d);

struct MergeDelta {
  Diagram result;
  NodeId kept;
  long long measured = 0;   ///< C_t(after) - C_t(before)
  long long predicted = 0;  ///< minus the summed cost of the dropped nodes
};

/// Merges a group of nodes sharing one triple, keeping the member whose
/// deepest parent is lowest in the diagram (so the kept node's range does
/// not shrink). Throws UsageError if the nodes are not mergeable.
[[nodiscard]] MergeDelta check_merge_delta(const Diagram& d, const std::vector<NodeId>& group);

/// Local geometry around a deleted redundant node N_l (level l, child at
/// level l + k) and the resulting interval for the change of C_t.
struct DeletionBound {
  int l = 0;
  int k = 0;
  int z = 0;               ///< offset from N_{l+k} to its shallowest child
  int q = 0;               ///< offset to the deepest other parent of N_{l+k}; 0 if none
  int r = 0;               ///< number of distinct parents of N_l
  std::vector<int> g;      ///< parent offsets l - level(P_i); {l + 1} for the root
  std::vector<int> h;      ///< offsets from P_i to its own deepest parent
  std::vector<int> j;      ///< offsets from P_i to its other child
  long long lower = 0;     ///< -min(g) - k - 1
  long long upper = 0;     ///< k (r - 1) + 1
  [[nodiscard]] bool contains(long long delta) const { return lower <= delta && delta <= upper; }
};

struct DeleteDelta {
  Diagram result;
  long long measured = 0;
  DeletionBound bound;
};

/// Deletes one redundant node. Throws UsageError if it is not redundant.
[[nodiscard]] DeleteDelta check_delete_delta(const Diagram& d, NodeId node);

}  // namespace resobdd
