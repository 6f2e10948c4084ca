#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "resobdd/types.hpp"

namespace resobdd {

inline constexpr std::size_t kDefaultBucketCount = 256;

/// 64-bit FNV-1a over the little-endian bytes of (lo, hi).
[[nodiscard]] std::uint64_t fnv1a_pair(NodeId lo, NodeId hi);

/// Array of per-level hash subtables keyed by the child pair. Each bucket
/// holds a collision list of node ids. Subtables are allocated on first use.
///
/// The table only stores ids; comparing the key of a listed node against a
/// probe is the caller's business (DiagramStore for hash-consing, the
/// recovery algorithms compare addresses only).
class UniqueTable {
 public:
  UniqueTable(std::uint32_t levels, std::size_t bucket_count = kDefaultBucketCount);

  [[nodiscard]] std::size_t bucket_count() const { return bucket_count_; }
  [[nodiscard]] std::uint32_t levels() const {
    return static_cast<std::uint32_t>(subtables_.size());
  }
  [[nodiscard]] std::size_t size() const { return size_; }

  [[nodiscard]] std::size_t bucket_of(NodeId lo, NodeId hi) const {
    return static_cast<std::size_t>(fnv1a_pair(lo, hi) % bucket_count_);
  }

  void insert(Level level, NodeId lo, NodeId hi, NodeId id);
  /// Returns false when `id` was not listed under that key.
  bool erase(Level level, NodeId lo, NodeId hi, NodeId id);

  /// Collision list of subtable `level` at `bucket` (empty if never used).
  [[nodiscard]] std::span<const NodeId> chain(Level level, std::size_t bucket) const;

  /// Walks the collision list for key (lo, hi) in subtable `level` looking
  /// for the address `id`. This is the probe used by index and edge recovery.
  [[nodiscard]] bool chain_contains(Level level, NodeId lo, NodeId hi, NodeId id) const;

 private:
  using Subtable = std::vector<std::vector<NodeId>>;

  std::size_t bucket_count_;
  std::size_t size_ = 0;
  std::vector<Subtable> subtables_;
};

}  // namespace resobdd
