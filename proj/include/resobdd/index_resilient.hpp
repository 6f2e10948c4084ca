#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "resobdd/diagram.hpp"
#include "resobdd/fault.hpp"
#include "resobdd/index_repair.hpp"

namespace resobdd {

/// numP per redundant node; absent for non-redundant or unreachable nodes.
class NumPMap {
 public:
  explicit NumPMap(std::size_t arena_size) : counts_(arena_size, kUndefined) {}

  [[nodiscard]] std::optional<std::uint32_t> at(NodeId id) const;
  void define(NodeId id);
  void increment(NodeId id);

 private:
  static constexpr std::uint32_t kUndefined = 0xFFFFFFFFu;
  std::vector<std::uint32_t> counts_;
};

/// Counts, for each redundant node N, the parents P such that
///  (1) both children of P are redundant and N is P's 1-child, or
///  (2) P has another child N' != N on a level below level(P) + 1.
/// A parent counts once even if both properties hold.
[[nodiscard]] NumPMap compute_numP(const Diagram& d, const LevelReader& level);
[[nodiscard]] NumPMap compute_numP(const Diagram& d);

struct Chain {
  NodeId head;
  std::vector<NodeId> members;  ///< N_2..N_k
  NodeId child;                 ///< unique child of the last chain node
};

struct ChainPlan {
  std::vector<char> to_remove;  ///< by arena slot
  std::vector<Chain> chains;    ///< in marking order

  [[nodiscard]] bool flagged(NodeId id) const {
    return !id.is_terminal() && to_remove[slot_of(id)] != 0;
  }
};

/// Breadth-first over the levels from the root: every redundant node with
/// numP 0 starts a maximal removable chain that follows 0-children while they
/// are redundant with numP 1.
[[nodiscard]] ChainPlan find_chains(const Diagram& d, const NumPMap& numP,
                                    const LevelReader& level);
[[nodiscard]] ChainPlan find_chains(const Diagram& d, const NumPMap& numP);

/// Deletes the flagged redundant nodes, redirecting edges to the chain
/// child. `flags` is indexed by arena slot.
[[nodiscard]] Diagram remove_flagged(const Diagram& d, const std::vector<char>& flags);

/// Index-resilient reduction of a diagram with no mergeable nodes (in
/// practice a quasi-reduced one) by deleting every chain headed by numP 0.
/// Throws ContractViolation if mergeable nodes are present.
[[nodiscard]] Diagram ir_reduce(const Diagram& d, FaultOverlay* overlay = nullptr,
                                RepairStats* stats = nullptr);

/// No mergeable pair, and every internal node on level i has a child on
/// level i + 1.
[[nodiscard]] bool is_index_resilient(const Diagram& d);
/// Index-resilient with no removable chain left.
[[nodiscard]] bool is_ir_reduced(const Diagram& d);

}  // namespace resobdd
