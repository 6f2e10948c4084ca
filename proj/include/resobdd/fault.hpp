#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "resobdd/diagram.hpp"

namespace resobdd {

/// The three components of a node under the single-component fault model.
enum class Component : std::uint8_t { Index, Lo, Hi };

/// What an injection overwrote, so a campaign can undo it.
struct FaultRecord {
  NodeId node;
  Component component;
  std::uint32_t original;  ///< old index, or old child id
  std::uint32_t garbage;   ///< value written instead
};

/// Corruption flags for the nodes of one store.
///
/// Injection overwrites the real stored component with a wrong value and
/// raises a flag. Detection is perfect: a component reads as corrupt iff its
/// flag is set. Terminals live in safe memory and cannot be corrupted; the
/// unique table is never touched.
class FaultOverlay {
 public:
  explicit FaultOverlay(std::shared_ptr<DiagramStore> store);
  explicit FaultOverlay(const Diagram& d) : FaultOverlay(d.shared_store()) {}

  [[nodiscard]] DiagramStore& store() { return *store_; }
  [[nodiscard]] const DiagramStore& store() const { return *store_; }

  FaultRecord inject(NodeId node, Component component, std::mt19937_64& rng);

  [[nodiscard]] bool is_corrupt(NodeId node, Component component) const;
  [[nodiscard]] bool index_corrupt(NodeId node) const {
    return is_corrupt(node, Component::Index);
  }
  [[nodiscard]] std::size_t corrupt_count() const { return corrupt_; }

  /// Writes a recovered value back and clears the flag.
  void repair(NodeId node, Component component, std::uint32_t value);
  /// Undoes an injection (campaign bookkeeping, not a recovery algorithm).
  void restore(const FaultRecord& record);

 private:
  [[nodiscard]] std::uint8_t& flags(NodeId node);
  [[nodiscard]] std::uint8_t flags(NodeId node) const;

  std::shared_ptr<DiagramStore> store_;
  std::vector<std::uint8_t> flags_;  // bit per Component
  std::size_t corrupt_ = 0;
};

}  // namespace resobdd
