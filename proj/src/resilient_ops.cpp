#include "resobdd/resilient_ops.hpp"

#include <algorithm>
#include <unordered_set>

#include "resobdd/index_resilient.hpp"
#include "resobdd/quasi_reduced.hpp"

namespace resobdd {

Diagram resilient_apply(BoolOp op, const Diagram& f, const Diagram& g,
                        const ApplyFaultPlan& faults, ResilientApplyStats* stats) {
  if (f.num_vars() != g.num_vars()) {
    throw UsageError("resilient_apply: operands have different variable counts");
  }
  const std::uint32_t n = f.num_vars();
  ResilientApplyStats local;
  ResilientApplyStats& st = stats ? *stats : local;
  LevelReader level_f(f, faults.f_faults, &st.repairs);
  LevelReader level_g(g, faults.g_faults, &st.repairs);

  auto store = std::make_shared<DiagramStore>(n, ReductionMode::KeepRedundant);
  PairMemo memo(f.store().arena_size() + g.store().arena_size());
  std::unordered_set<std::size_t> corrupt_at(faults.corrupt_memo_inserts.begin(),
                                             faults.corrupt_memo_inserts.end());
  std::size_t inserts = 0;

  std::function<NodeId(NodeId, NodeId)> rec = [&](NodeId a, NodeId b) -> NodeId {
    if (faults.on_step) faults.on_step(st.calls);
    ++st.calls;
    if (a.is_terminal() && b.is_terminal()) return terminal(op(a == kTerm1, b == kTerm1));
    auto probe = memo.lookup(a, b);
    if (!probe.value.is_null()) {
      ++st.memo_hits;
      return probe.value;
    }
    if (probe.corrupted) ++st.memo_recomputations;
    ++st.computed_pairs;

    Level la = level_f(a);
    Level lb = level_g(b);
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
    NodeId result = store->add_node(top, lo, hi);

    memo.store(a, b, result);
    if (corrupt_at.contains(inserts)) {
      memo.corrupt(a, b, NodeId{result.value ^ 0x5A5A5A5Au});
      ++st.memo_corrupted;
    }
    ++inserts;
    return result;
  };
  NodeId root = rec(f.root(), g.root());
  return Diagram(std::move(store), root);
}

Diagram reduction_procedure(const Diagram& d, FaultOverlay* overlay,
                            const ReductionHooks& hooks, RepairStats* stats) {
  Diagram padded = pad_chains(d, overlay, stats);
  FaultOverlay padded_faults(padded);
  if (hooks.after_stage) hooks.after_stage(ReductionStage::Padded, padded, padded_faults);

  Diagram merged = merge_quadratic(padded, &padded_faults, stats);
  FaultOverlay merged_faults(merged);
  if (hooks.after_stage) hooks.after_stage(ReductionStage::Merged, merged, merged_faults);

  return ir_reduce(merged, &merged_faults, stats);
}

}  // namespace resobdd
