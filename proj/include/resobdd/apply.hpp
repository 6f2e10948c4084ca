#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "resobdd/diagram.hpp"

namespace resobdd {

/// Binary Boolean operator as a 4-entry truth table; bit (2a + b) holds
/// op(a, b).
class BoolOp {
 public:
  constexpr explicit BoolOp(std::uint8_t table) : table_(table & 0xF) {}

  [[nodiscard]] constexpr bool operator()(bool a, bool b) const {
    return (table_ >> ((a ? 2 : 0) + (b ? 1 : 0))) & 1u;
  }
  [[nodiscard]] constexpr std::uint8_t table() const { return table_; }

  static const BoolOp And, Or, Xor, Nand, Nor, Xnor, Implies;
  /// "and", "or", "xor", "nand", "nor", "xnor", "implies".
  static std::optional<BoolOp> from_name(std::string_view name);

  friend constexpr bool operator==(BoolOp, BoolOp) = default;

 private:
  std::uint8_t table_;
};

inline constexpr BoolOp BoolOp::And{0b1000};
inline constexpr BoolOp BoolOp::Or{0b1110};
inline constexpr BoolOp BoolOp::Xor{0b0110};
inline constexpr BoolOp BoolOp::Nand{0b0111};
inline constexpr BoolOp BoolOp::Nor{0b0001};
inline constexpr BoolOp BoolOp::Xnor{0b1001};
inline constexpr BoolOp BoolOp::Implies{0b1011};

/// Open-addressed map from a node pair to a result id (the M_A table).
///
/// Every entry carries a corruption flag. A flagged entry reads as absent
/// (perfect detection) and is overwritten when the pair is recomputed.
class PairMemo {
 public:
  explicit PairMemo(std::size_t capacity_hint = 64);

  struct Probe {
    NodeId value;        ///< kNoNode when absent or corrupted
    bool corrupted = false;
  };

  [[nodiscard]] Probe lookup(NodeId a, NodeId b) const;
  void store(NodeId a, NodeId b, NodeId value);
  /// Scrambles the value stored for (a, b) and flags it. No-op if absent.
  bool corrupt(NodeId a, NodeId b, NodeId garbage);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] std::size_t corrupted_count() const;

 private:
  struct Slot {
    std::uint32_t a = 0xFFFFFFFFu;
    std::uint32_t b = 0xFFFFFFFFu;
    NodeId value;
    bool corrupted = false;
    [[nodiscard]] bool empty() const { return a == 0xFFFFFFFFu; }
  };

  [[nodiscard]] std::size_t find_slot(NodeId a, NodeId b) const;
  void grow();

  std::vector<Slot> slots_;
  std::size_t size_ = 0;
};

struct ApplyOptions {
  bool use_memo = true;
  /// Dense |B_f| x |B_g| matrix instead of the hash map; only sensible for
  /// small operands.
  bool dense_memo = false;
};

struct ApplyStats {
  std::size_t calls = 0;           ///< recursive invocations
  std::size_t computed_pairs = 0;  ///< pairs whose result was computed
  std::size_t memo_hits = 0;
};

/// Standard Apply: result is a reduced diagram built in `target` (which must
/// be an Robdd-mode store). Operands may live in other stores.
NodeId apply_into(DiagramStore& target, BoolOp op, const Diagram& f, const Diagram& g,
                  const ApplyOptions& options = {}, ApplyStats* stats = nullptr);

/// Standard Apply into a fresh Robdd store.
[[nodiscard]] Diagram apply(BoolOp op, const Diagram& f, const Diagram& g,
                            const ApplyOptions& options = {}, ApplyStats* stats = nullptr);

/// Functional equivalence via isomorphism of the canonical ROBDDs.
[[nodiscard]] bool equivalent(const Diagram& f, const Diagram& g);

}  // namespace resobdd
