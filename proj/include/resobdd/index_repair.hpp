#pragma once

#include <cstddef>

#include "resobdd/diagram.hpp"
#include "resobdd/fault.hpp"

namespace resobdd {

struct RepairStats {
  std::size_t invocations = 0;  ///< calls of index_reconstruct, recursive ones included
};

/// Recursive index reconstruction on an index-resilient diagram: a node's
/// level is min(child levels) - 1, and corrupted children are repaired
/// first. Every repaired index is written back through `overlay`.
///
/// Requires intact edges and safe terminals. Each invocation repairs a
/// distinct corrupted node, so the call count is bounded by the number of
/// corrupted nodes below (and including) `node`.
Level index_reconstruct(FaultOverlay& overlay, NodeId node, RepairStats* stats = nullptr);

/// Level accessor used by the resilient transforms. Without an overlay it
/// reads stored indices; with one, a flagged index is repaired on first
/// touch via index_reconstruct.
class LevelReader {
 public:
  explicit LevelReader(const Diagram& d, FaultOverlay* overlay = nullptr,
                       RepairStats* stats = nullptr);

  [[nodiscard]] Level operator()(NodeId id) const;
  [[nodiscard]] std::uint32_t num_vars() const { return store_->num_vars(); }

 private:
  const DiagramStore* store_;
  FaultOverlay* overlay_;
  RepairStats* stats_;
};

}  // namespace resobdd
