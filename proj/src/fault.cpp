#include "resobdd/fault.hpp"

#include <string>

namespace resobdd {

namespace {

std::uint8_t bit(Component c) { return static_cast<std::uint8_t>(1u << static_cast<int>(c)); }

}  // namespace

FaultOverlay::FaultOverlay(std::shared_ptr<DiagramStore> store)
    : store_(std::move(store)), flags_(store_ ? store_->arena_size() : 0, 0) {
  if (!store_) throw UsageError("fault overlay without store");
}

std::uint8_t& FaultOverlay::flags(NodeId node) {
  if (node.is_terminal()) throw UsageError("terminals are kept in safe memory");
  if (!store_->contains(node)) throw UsageError("node not in store");
  if (slot_of(node) >= flags_.size()) flags_.resize(store_->arena_size(), 0);
  return flags_[slot_of(node)];
}

std::uint8_t FaultOverlay::flags(NodeId node) const {
  if (node.is_terminal() || node.is_null() || slot_of(node) >= flags_.size()) return 0;
  return flags_[slot_of(node)];
}

bool FaultOverlay::is_corrupt(NodeId node, Component component) const {
  return (flags(node) & bit(component)) != 0;
}

FaultRecord FaultOverlay::inject(NodeId node, Component component, std::mt19937_64& rng) {
  std::uint8_t& f = flags(node);
  Node& target = store_->raw_node(node);
  FaultRecord rec{node, component, 0, 0};
  if (component == Component::Index) {
    const std::uint32_t n = store_->num_vars();
    rec.original = target.index;
    if (n <= 1) {
      rec.garbage = n;
    } else {
      std::uniform_int_distribution<std::uint32_t> pick(0, n - 2);
      rec.garbage = pick(rng);
      if (rec.garbage >= rec.original) ++rec.garbage;
    }
    target.index = rec.garbage;
  } else {
    NodeId& edge = component == Component::Lo ? target.lo : target.hi;
    rec.original = edge.value;
    const auto ids = static_cast<std::uint32_t>(store_->arena_size() + 2);
    std::uniform_int_distribution<std::uint32_t> pick(0, ids - 2);
    rec.garbage = pick(rng);
    if (rec.garbage >= rec.original) ++rec.garbage;
    edge = NodeId{rec.garbage};
  }
  if (!(f & bit(component))) ++corrupt_;
  f |= bit(component);
  return rec;
}

void FaultOverlay::repair(NodeId node, Component component, std::uint32_t value) {
  std::uint8_t& f = flags(node);
  Node& target = store_->raw_node(node);
  switch (component) {
    case Component::Index: target.index = value; break;
    case Component::Lo: target.lo = NodeId{value}; break;
    case Component::Hi: target.hi = NodeId{value}; break;
  }
  if (f & bit(component)) --corrupt_;
  f &= static_cast<std::uint8_t>(~bit(component));
}

void FaultOverlay::restore(const FaultRecord& record) {
  repair(record.node, record.component, record.original);
}

}  // namespace resobdd
