#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "resobdd/apply.hpp"
#include "resobdd/diagram.hpp"
#include "resobdd/fault.hpp"
#include "resobdd/index_repair.hpp"

namespace resobdd {

/// Faults that hit a resilient Apply while it runs.
struct ApplyFaultPlan {
  /// Overlays of the operand stores (may be the same object when f and g
  /// share a store). Flagged indices are repaired on first touch.
  FaultOverlay* f_faults = nullptr;
  FaultOverlay* g_faults = nullptr;
  /// 0-based ordinals of memo insertions whose entry gets corrupted right
  /// after it is stored.
  std::vector<std::size_t> corrupt_memo_inserts;
  /// Called at the start of every recursive call with its ordinal; may
  /// inject further index faults into the operand overlays.
  std::function<void(std::size_t)> on_step;
};

struct ResilientApplyStats {
  std::size_t calls = 0;
  std::size_t computed_pairs = 0;
  std::size_t memo_hits = 0;
  std::size_t memo_corrupted = 0;       ///< entries corrupted by the plan
  std::size_t memo_recomputations = 0;  ///< lookups that found a corrupted entry
  RepairStats repairs;
};

/// Apply without the unique table and without the deletion rule. The output
/// may hold mergeable and redundant nodes but keeps a child on the next
/// level for every node when both operands are index-resilient.
[[nodiscard]] Diagram resilient_apply(BoolOp op, const Diagram& f, const Diagram& g,
                                      const ApplyFaultPlan& faults = {},
                                      ResilientApplyStats* stats = nullptr);

enum class ReductionStage { Padded, Merged };

struct ReductionHooks {
  /// Runs on each intermediate diagram before the next stage reads it; may
  /// inject index faults through the supplied overlay.
  std::function<void(ReductionStage, const Diagram&, FaultOverlay&)> after_stage;
};

/// Pads chains, merges level by level, then removes chains. Output is
/// index-resilient reduced. Corrupted indices met on the way are repaired.
[[nodiscard]] Diagram reduction_procedure(const Diagram& d, FaultOverlay* overlay = nullptr,
                                          const ReductionHooks& hooks = {},
                                          RepairStats* stats = nullptr);

}  // namespace resobdd
