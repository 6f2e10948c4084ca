#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace resobdd {

/// Variable index, which equals the level of the variable under the identity
/// order. Terminals sit on the pseudo-level n.
using Level = std::uint32_t;

/// Handle of a node inside a DiagramStore. Ids 0 and 1 are the two terminals,
/// every other value names an arena slot.
struct NodeId {
  std::uint32_t value = 0xFFFFFFFFu;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}

  [[nodiscard]] constexpr bool is_terminal() const { return value < 2; }
  [[nodiscard]] constexpr bool is_null() const { return value == 0xFFFFFFFFu; }

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

inline constexpr NodeId kTerm0{0};
inline constexpr NodeId kTerm1{1};
inline constexpr NodeId kNoNode{};

[[nodiscard]] constexpr NodeId terminal(bool value) {
  return value ? kTerm1 : kTerm0;
}

/// Arena slot of a non-terminal id.
[[nodiscard]] constexpr std::size_t slot_of(NodeId id) { return id.value - 2; }
[[nodiscard]] constexpr NodeId id_of_slot(std::size_t slot) {
  return NodeId{static_cast<std::uint32_t>(slot + 2)};
}

/// The triple [index, 0-child, 1-child].
struct Node {
  Level index = 0;
  NodeId lo;
  NodeId hi;

  [[nodiscard]] bool redundant() const { return lo == hi; }
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments the operation cannot accept.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An operation would break the ordering property or hit a stale id.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input violates the documented precondition of a transform.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  /// `line` is 1-based; 0 means the error is not tied to a file position.
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace resobdd

template <>
struct std::hash<resobdd::NodeId> {
  std::size_t operator()(resobdd::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
