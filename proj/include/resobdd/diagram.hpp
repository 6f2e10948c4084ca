#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resobdd/types.hpp"
#include "resobdd/unique_table.hpp"

namespace resobdd {

enum class ReductionMode {
  Robdd,          ///< merge and deletion rule
  KeepRedundant,  ///< merge rule only
};

/// Append-only node arena plus its unique table. Ids are never reused.
///
/// Single writer. Once the diagrams referencing a store are built, reads may
/// happen concurrently. Fault injection mutates the arena in place without
/// touching the unique table, which models a safe table.
class DiagramStore {
 public:
  explicit DiagramStore(std::uint32_t num_vars,
                        ReductionMode mode = ReductionMode::Robdd,
                        std::size_t bucket_count = kDefaultBucketCount);

  [[nodiscard]] std::uint32_t num_vars() const { return num_vars_; }
  [[nodiscard]] ReductionMode mode() const { return mode_; }
  [[nodiscard]] const UniqueTable& table() const { return table_; }
  [[nodiscard]] std::size_t arena_size() const { return nodes_.size(); }

  /// Hash-consing constructor. Applies the merge rule, and the deletion rule
  /// when the store is in Robdd mode.
  NodeId mk_node(Level index, NodeId lo, NodeId hi);

  /// Always allocates a fresh node (no rule applied) and registers it in the
  /// unique table under its own key.
  NodeId add_node(Level index, NodeId lo, NodeId hi);

  /// Existing node with exactly this triple, if registered.
  [[nodiscard]] NodeId find(Level index, NodeId lo, NodeId hi) const;

  [[nodiscard]] bool contains(NodeId id) const {
    return id.is_terminal() || (!id.is_null() && slot_of(id) < nodes_.size());
  }
  [[nodiscard]] const Node& node(NodeId id) const;
  /// Raw access for fault injection and in-place repair.
  [[nodiscard]] Node& raw_node(NodeId id);

  /// Stored level; terminals report num_vars().
  [[nodiscard]] Level level(NodeId id) const {
    return id.is_terminal() ? num_vars_ : node(id).index;
  }

 private:
  void check_ordering(Level index, NodeId lo, NodeId hi) const;

  std::uint32_t num_vars_;
  ReductionMode mode_;
  std::vector<Node> nodes_;
  UniqueTable table_;
};

/// A root inside a shared store.
class Diagram {
 public:
  Diagram(std::shared_ptr<DiagramStore> store, NodeId root);

  static Diagram constant(std::uint32_t num_vars, bool value,
                          ReductionMode mode = ReductionMode::Robdd);

  [[nodiscard]] NodeId root() const { return root_; }
  [[nodiscard]] std::uint32_t num_vars() const { return store_->num_vars(); }
  [[nodiscard]] const DiagramStore& store() const { return *store_; }
  [[nodiscard]] DiagramStore& store() { return *store_; }
  [[nodiscard]] const std::shared_ptr<DiagramStore>& shared_store() const { return store_; }

  [[nodiscard]] const Node& node(NodeId id) const { return store_->node(id); }
  [[nodiscard]] Level level(NodeId id) const { return store_->level(id); }

 private:
  std::shared_ptr<DiagramStore> store_;
  NodeId root_;
};

// ---------------------------------------------------------------------------
// Traversal

/// Reachable internal nodes, children before parents (0-edge first).
[[nodiscard]] std::vector<NodeId> postorder(const Diagram& d);
/// Reachable internal nodes in DFS preorder (0-edge first).
[[nodiscard]] std::vector<NodeId> preorder(const Diagram& d);
/// Reachable internal nodes bucketed by stored level; within a level in
/// preorder.
[[nodiscard]] std::vector<std::vector<NodeId>> nodes_by_level(const Diagram& d);

/// Number of reachable internal nodes.
[[nodiscard]] std::size_t count_nodes(const Diagram& d);

// ---------------------------------------------------------------------------
// Semantics

/// `assignment[i]` is the value of x_i; nonzero means 1.
[[nodiscard]] bool evaluate(const Diagram& d, std::span<const std::uint8_t> assignment);
/// Bit i of `bits` is the value of x_i. Requires num_vars <= 64.
[[nodiscard]] bool evaluate_bits(const Diagram& d, std::uint64_t bits);
/// Entry `a` is f(a) with bit i of `a` = x_i. Requires num_vars <= 24.
[[nodiscard]] std::vector<bool> truth_table(const Diagram& d);

/// Complete (unreduced) decision tree of a truth table in a KeepRedundant
/// store; 2^n - 1 internal nodes.
[[nodiscard]] Diagram decision_tree(std::uint32_t num_vars, const std::vector<bool>& table);

/// True iff a cube over {0,1,-} (also '2' for '-') covers the assignment.
[[nodiscard]] bool cube_matches(std::string_view cube, std::uint64_t bits);

/// ROBDD of the union of `onset` cubes. Don't-care cubes join the function
/// only when `dc_as_one` is set.
[[nodiscard]] Diagram from_cubes(std::uint32_t num_vars,
                                 std::span<const std::string> onset,
                                 std::span<const std::string> dcset = {},
                                 bool dc_as_one = false);

/// Canonical ROBDD via bottom-up hash-consing.
[[nodiscard]] Diagram reduce_robdd(const Diagram& d);
/// Cofactor f|_{x_var = value} as an ROBDD.
[[nodiscard]] Diagram restrict(const Diagram& d, Level var, bool value);
/// Copy with the terminals swapped, structure unchanged.
[[nodiscard]] Diagram negate(const Diagram& d);

/// Structural isomorphism by simultaneous DFS.
[[nodiscard]] bool isomorphic(const Diagram& a, const Diagram& b);

/// True iff every reachable node has index < level of both children.
[[nodiscard]] bool is_ordered(const Diagram& d);

// ---------------------------------------------------------------------------
// Rewriting

using Redirect = std::function<NodeId(NodeId)>;

/// Rebuilds the reachable part of `d` into a fresh store without applying any
/// reduction rule. Every child reference and the root first pass through
/// `redirect`, which lets callers merge (map N to its representative) or
/// delete (map N to its child) nodes. Ids are assigned in postorder, so two
/// copies of the same diagram get the same ids.
[[nodiscard]] Diagram rebuild(const Diagram& d, const Redirect& redirect = {},
                              ReductionMode mode = ReductionMode::KeepRedundant,
                              std::size_t bucket_count = kDefaultBucketCount);

/// Groups (size >= 2) of reachable nodes sharing the same triple.
[[nodiscard]] std::vector<std::vector<NodeId>> mergeable_groups(const Diagram& d);

/// Graphviz text with 0-edges dashed and terminals boxed.
[[nodiscard]] std::string export_dot(const Diagram& d, std::string_view name = "obdd");

}  // namespace resobdd
