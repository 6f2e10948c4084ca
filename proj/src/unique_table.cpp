#include "resobdd/unique_table.hpp"

#include <algorithm>

namespace resobdd {

std::uint64_t fnv1a_pair(NodeId lo, NodeId hi) {
  constexpr std::uint64_t kOffset = 14695981039346656037ull;
  constexpr std::uint64_t kPrime = 1099511628211ull;
  std::uint64_t h = kOffset;
  for (std::uint32_t word : {lo.value, hi.value}) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (word >> (8 * byte)) & 0xFFu;
      h *= kPrime;
    }
  }
  return h;
}

UniqueTable::UniqueTable(std::uint32_t levels, std::size_t bucket_count)
    : bucket_count_(bucket_count == 0 ? 1 : bucket_count), subtables_(levels) {}

void UniqueTable::insert(Level level, NodeId lo, NodeId hi, NodeId id) {
  auto& sub = subtables_.at(level);
  if (sub.empty()) sub.resize(bucket_count_);
  sub[bucket_of(lo, hi)].push_back(id);
  ++size_;
}

bool UniqueTable::erase(Level level, NodeId lo, NodeId hi, NodeId id) {
  auto& sub = subtables_.at(level);
  if (sub.empty()) return false;
  auto& list = sub[bucket_of(lo, hi)];
  auto it = std::find(list.begin(), list.end(), id);
  if (it == list.end()) return false;
  list.erase(it);
  --size_;
  return true;
}

std::span<const NodeId> UniqueTable::chain(Level level, std::size_t bucket) const {
  if (level >= subtables_.size()) return {};
  const auto& sub = subtables_[level];
  if (sub.empty()) return {};
  return sub[bucket];
}

bool UniqueTable::chain_contains(Level level, NodeId lo, NodeId hi, NodeId id) const {
  auto list = chain(level, bucket_of(lo, hi));
  return std::find(list.begin(), list.end(), id) != list.end();
}

}  // namespace resobdd
