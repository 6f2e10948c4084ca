#include "resobdd/apply.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace resobdd {

std::optional<BoolOp> BoolOp::from_name(std::string_view name) {
  if (name == "and") return And;
  if (name == "or") return Or;
  if (name == "xor") return Xor;
  if (name == "nand") return Nand;
  if (name == "nor") return Nor;
  if (name == "xnor") return Xnor;
  if (name == "implies") return Implies;
  return std::nullopt;
}

namespace {

std::size_t mix(std::uint32_t a, std::uint32_t b) {
  std::uint64_t h = (std::uint64_t{a} << 32) | b;
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

}  // namespace

PairMemo::PairMemo(std::size_t capacity_hint) {
  std::size_t cap = 16;
  while (cap < capacity_hint * 2) cap <<= 1;
  slots_.resize(cap);
}

std::size_t PairMemo::find_slot(NodeId a, NodeId b) const {
  std::size_t mask = slots_.size() - 1;
  std::size_t i = mix(a.value, b.value) & mask;
  while (true) {
    const Slot& s = slots_[i];
    if (s.empty() || (s.a == a.value && s.b == b.value)) return i;
    i = (i + 1) & mask;
  }
}

PairMemo::Probe PairMemo::lookup(NodeId a, NodeId b) const {
  const Slot& s = slots_[find_slot(a, b)];
  if (s.empty()) return {};
  if (s.corrupted) return {kNoNode, true};
  return {s.value, false};
}

void PairMemo::store(NodeId a, NodeId b, NodeId value) {
  if ((size_ + 1) * 4 > slots_.size() * 3) grow();
  Slot& s = slots_[find_slot(a, b)];
  if (s.empty()) {
    s.a = a.value;
    s.b = b.value;
    ++size_;
  }
  s.value = value;
  s.corrupted = false;
}

bool PairMemo::corrupt(NodeId a, NodeId b, NodeId garbage) {
  Slot& s = slots_[find_slot(a, b)];
  if (s.empty()) return false;
  s.value = garbage;
  s.corrupted = true;
  return true;
}

std::size_t PairMemo::corrupted_count() const {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(),
                    [](const Slot& s) { return !s.empty() && s.corrupted; }));
}

void PairMemo::grow() {
  std::vector<Slot> old = std::move(slots_);
  slots_.assign(old.size() * 2, Slot{});
  size_ = 0;
  for (const Slot& s : old) {
    if (s.empty()) continue;
    Slot& t = slots_[find_slot(NodeId{s.a}, NodeId{s.b})];
    t = s;
    ++size_;
  }
}

namespace {

/// Dense matrix indexed by arena slot (terminals get the last two rows).
class DenseMemo {
 public:
  DenseMemo(std::size_t rows, std::size_t cols)
      : rows_(rows + 2), cols_(cols + 2), cells_(rows_ * cols_, kNoNode) {}
  NodeId& at(NodeId a, NodeId b) { return cells_[index(a, rows_) * cols_ + index(b, cols_)]; }

 private:
  static std::size_t index(NodeId id, std::size_t extent) {
    return id.is_terminal() ? extent - 2 + id.value : slot_of(id);
  }
  std::size_t rows_, cols_;
  std::vector<NodeId> cells_;
};

}  // namespace

NodeId apply_into(DiagramStore& target, BoolOp op, const Diagram& f, const Diagram& g,
                  const ApplyOptions& options, ApplyStats* stats) {
  if (f.num_vars() != g.num_vars() || target.num_vars() != f.num_vars()) {
    throw UsageError("apply: operands have different variable counts");
  }
  if (target.mode() != ReductionMode::Robdd) {
    throw UsageError("apply: target store must reduce");
  }
  const std::uint32_t n = f.num_vars();
  ApplyStats local;
  ApplyStats& st = stats ? *stats : local;

  PairMemo memo(options.dense_memo ? 16 : 256);
  std::optional<DenseMemo> dense;
  if (options.dense_memo) dense.emplace(f.store().arena_size(), g.store().arena_size());

  std::function<NodeId(NodeId, NodeId)> rec = [&](NodeId a, NodeId b) -> NodeId {
    ++st.calls;
    if (a.is_terminal() && b.is_terminal()) return terminal(op(a == kTerm1, b == kTerm1));
    if (options.use_memo) {
      NodeId hit = dense ? dense->at(a, b) : memo.lookup(a, b).value;
      if (!hit.is_null()) {
        ++st.memo_hits;
        return hit;
      }
    }
    ++st.computed_pairs;
    Level la = a.is_terminal() ? n : f.node(a).index;
    Level lb = b.is_terminal() ? n : g.node(b).index;
    Level top = std::min(la, lb);
    NodeId a0 = a, a1 = a, b0 = b, b1 = b;
    if (la == top) {
      a0 = f.node(a).lo;
      a1 = f.node(a).hi;
    }
    if (lb == top) {
      b0 = g.node(b).lo;
      b1 = g.node(b).hi;
    }
    NodeId lo = rec(a0, b0);
    NodeId hi = rec(a1, b1);
    NodeId result = target.mk_node(top, lo, hi);
    if (options.use_memo) {
      if (dense) {
        dense->at(a, b) = result;
      } else {
        memo.store(a, b, result);
      }
    }
    return result;
  };
  return rec(f.root(), g.root());
}

Diagram apply(BoolOp op, const Diagram& f, const Diagram& g, const ApplyOptions& options,
              ApplyStats* stats) {
  if (f.num_vars() != g.num_vars()) {
    throw UsageError("apply: operands have different variable counts");
  }
  auto store = std::make_shared<DiagramStore>(f.num_vars(), ReductionMode::Robdd);
  NodeId root = apply_into(*store, op, f, g, options, stats);
  return Diagram(std::move(store), root);
}

bool equivalent(const Diagram& f, const Diagram& g) {
  if (f.num_vars() != g.num_vars()) throw UsageError("equivalent: variable counts differ");
  return isomorphic(reduce_robdd(f), reduce_robdd(g));
}

}  // namespace resobdd
