#pragma once

#include "resobdd/diagram.hpp"
#include "resobdd/fault.hpp"
#include "resobdd/index_repair.hpp"

namespace resobdd {

/// Quasi-reduced form of the function of `d`: merge rule only, every edge
/// spans exactly one level and the root sits on level 0. Built bottom-up by
/// hash-consing in a KeepRedundant store.
[[nodiscard]] Diagram build_qr(const Diagram& d, std::size_t bucket_count = kDefaultBucketCount);

/// Inserts a fresh chain of redundant nodes on every edge that skips levels
/// (edges into terminals included), and above a root that is not on level 0.
/// Levels are read through `overlay` when given, repairing corrupted indices.
[[nodiscard]] Diagram pad_chains(const Diagram& d, FaultOverlay* overlay = nullptr,
                                 RepairStats* stats = nullptr);

/// Merge rule without hash structures: nodes are compared pairwise level by
/// level from the bottom, O(m^2). Requires every edge to span one level.
[[nodiscard]] Diagram merge_quadratic(const Diagram& d, FaultOverlay* overlay = nullptr,
                                      RepairStats* stats = nullptr);

/// Every edge spans exactly one level and the root is on level 0.
[[nodiscard]] bool has_level_discipline(const Diagram& d);

}  // namespace resobdd
