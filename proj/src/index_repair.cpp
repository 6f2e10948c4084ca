#include "resobdd/index_repair.hpp"

#include <algorithm>

namespace resobdd {

Level index_reconstruct(FaultOverlay& overlay, NodeId node, RepairStats* stats) {
  DiagramStore& store = overlay.store();
  if (stats) ++stats->invocations;
  const Node n = store.node(node);
  auto child_level = [&](NodeId child) -> Level {
    if (child.is_terminal()) return store.num_vars();
    if (overlay.index_corrupt(child)) return index_reconstruct(overlay, child, stats);
    return store.node(child).index;
  };
  // Both children terminal gives n - 1, one terminal child defers to the other.
  Level lo = child_level(n.lo);
  Level hi = child_level(n.hi);
  Level index = std::min(lo, hi) - 1;
  overlay.repair(node, Component::Index, index);
  return index;
}

LevelReader::LevelReader(const Diagram& d, FaultOverlay* overlay, RepairStats* stats)
    : store_(&d.store()), overlay_(overlay), stats_(stats) {
  if (overlay_ && &overlay_->store() != store_) {
    throw UsageError("fault overlay belongs to a different store");
  }
}

Level LevelReader::operator()(NodeId id) const {
  if (id.is_terminal()) return store_->num_vars();
  if (overlay_ && overlay_->index_corrupt(id)) return index_reconstruct(*overlay_, id, stats_);
  return store_->node(id).index;
}

}  // namespace resobdd
