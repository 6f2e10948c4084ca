#include "resobdd/edge_recovery.hpp"

#include <ostream>
#include <random>

namespace resobdd {

NodeVector::NodeVector(const Diagram& d) {
  // Iterative DFS; a frame's state counts how many children were pushed.
  std::vector<std::pair<NodeId, int>> stack;
  auto visit = [&](NodeId id) {
    if (pos_.count(id)) return;
    pos_.emplace(id, entries_.size());
    if (id.is_terminal()) {
      entries_.push_back({id, d.num_vars(), kNoNode, kNoNode});
    } else {
      const Node& n = d.node(id);
      entries_.push_back({id, n.index, n.lo, n.hi});
      stack.emplace_back(id, 0);
    }
  };
  visit(d.root());
  while (!stack.empty()) {
    auto& [id, state] = stack.back();
    if (state == 2) {
      stack.pop_back();
      continue;
    }
    const Node& n = d.node(id);
    NodeId next = state == 0 ? n.lo : n.hi;
    ++state;
    visit(next);
  }

  // One stamped walk per entry: O(|B|^2) worst case.
  sub_.assign(entries_.size(), 0);
  std::vector<std::uint32_t> mark(entries_.size(), 0);
  std::vector<std::size_t> work;
  for (std::size_t p = 0; p < entries_.size(); ++p) {
    const auto stamp = static_cast<std::uint32_t>(p + 1);
    std::size_t count = 0;
    work.assign(1, p);
    mark[p] = stamp;
    while (!work.empty()) {
      std::size_t q = work.back();
      work.pop_back();
      ++count;
      for (NodeId c : {entries_[q].lo, entries_[q].hi}) {
        if (c.is_null()) continue;
        std::size_t cp = pos_.at(c);
        if (mark[cp] != stamp) {
          mark[cp] = stamp;
          work.push_back(cp);
        }
      }
    }
    sub_[p] = count;
  }
}

std::size_t NodeVector::position_of(NodeId id) const {
  auto it = pos_.find(id);
  if (it == pos_.end()) throw UsageError("node not in node vector");
  return it->second;
}

std::size_t NodeVector::subgraph_size(NodeId id) const { return sub_[position_of(id)]; }

std::size_t child_bound(const NodeVector& v, NodeId node, Edge edge) {
  const std::size_t p = v.position_of(node);
  if (v[p].id.is_terminal()) throw UsageError("terminals have no edges");
  if (edge == Edge::Zero) return p + 1;
  return p + v.subgraph_size(v[p].lo) + 1;
}

std::vector<NodeId> candidate_set(const NodeVector& v, NodeId node, std::size_t bound) {
  const Level l = v[v.position_of(node)].level;
  std::vector<NodeId> out;
  for (std::size_t p = 0; p <= bound && p < v.size(); ++p) {
    if (v[p].level > l) out.push_back(v[p].id);
  }
  return out;
}

EdgeRecovery reconstruct_edge(const Diagram& d, const NodeVector& v, NodeId node, Edge edge,
                              bool strict) {
  const NodeVector::Entry& e = v[v.position_of(node)];
  const UniqueTable& table = d.store().table();
  // Index and sibling edge are intact under the single-component model.
  const Node& stored = d.node(node);

  EdgeRecovery r;
  const std::vector<NodeId> cands = candidate_set(v, node, child_bound(v, node, edge));
  r.candidates = cands.size();
  for (NodeId cand : cands) {
    NodeId lo = edge == Edge::Zero ? cand : stored.lo;
    NodeId hi = edge == Edge::One ? cand : stored.hi;
    ++r.probes;
    if (!table.chain_contains(e.level, lo, hi, node)) continue;
    r.matches.push_back(cand);
    if (!strict) break;
  }
  if (r.matches.empty()) {
    r.status = EdgeStatus::NoMatch;
  } else if (r.matches.size() == 1 || !strict) {
    r.status = EdgeStatus::Recovered;
    r.child = r.matches.front();
  } else {
    r.status = EdgeStatus::Ambiguous;
  }
  return r;
}

std::vector<EdgeCampaignRow> edge_campaign(const Diagram& d, const EdgeCampaignConfig& cfg) {
  std::vector<EdgeCampaignRow> rows;
  for (std::size_t size : cfg.table_sizes) {
    if (size == 0) throw UsageError("table size must be positive");
    Diagram copy = rebuild(d, {}, d.store().mode(), size);
    NodeVector v(copy);
    std::vector<NodeId> internal;
    for (const auto& e : v.entries()) {
      if (!e.id.is_terminal()) internal.push_back(e.id);
    }

    EdgeCampaignRow row;
    row.table_size = size;
    if (internal.empty() || cfg.trials == 0) {
      rows.push_back(std::move(row));
      continue;
    }
    FaultOverlay overlay(copy);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, internal.size() - 1);
    std::bernoulli_distribution coin(0.5);
    const auto denom = static_cast<double>(v.size());
    double cand_sum = 0.0;
    double probe_sum = 0.0;
    const UniqueTable& table = copy.store().table();

    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const NodeId node = internal[pick(rng)];
      const Edge edge = coin(rng) ? Edge::One : Edge::Zero;
      const Node truth_node = copy.node(node);
      const NodeId truth = edge == Edge::Zero ? truth_node.lo : truth_node.hi;
      FaultRecord rec = overlay.inject(node, edge == Edge::Zero ? Component::Lo : Component::Hi, rng);

      EdgeRecovery r = reconstruct_edge(copy, v, node, edge, cfg.strict);
      ++row.trials;
      cand_sum += static_cast<double>(r.candidates) / denom;
      probe_sum += static_cast<double>(r.probes) / denom;
      switch (r.status) {
        case EdgeStatus::Recovered:
          if (r.child == truth) {
            ++row.successes;
          } else {
            ++row.wrong;
            NodeId sib = edge == Edge::Zero ? truth_node.hi : truth_node.lo;
            auto key = [&](NodeId c) {
              return edge == Edge::Zero ? table.bucket_of(c, sib) : table.bucket_of(sib, c);
            };
            row.failures.push_back({node, edge, truth, r.child, key(truth), key(r.child)});
          }
          break;
        case EdgeStatus::Ambiguous:
          ++row.ambiguous;
          break;
        case EdgeStatus::NoMatch:
          ++row.no_match;
          break;
      }
      overlay.restore(rec);
    }
    row.mean_candidate_ratio = cand_sum / static_cast<double>(row.trials);
    row.mean_probe_ratio = probe_sum / static_cast<double>(row.trials);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_campaign_csv_header(std::ostream& os) {
  os << "benchmark,output_idx,table_size,trials,successes,ambiguous,mean_candidate_ratio,"
        "mean_probe_ratio,seed\n";
}

void write_campaign_csv(std::ostream& os, const std::string& benchmark, std::size_t output_idx,
                        std::uint64_t seed, const std::vector<EdgeCampaignRow>& rows) {
  for (const auto& r : rows) {
    os << benchmark << ',' << output_idx << ',' << r.table_size << ',' << r.trials << ','
       << r.successes << ',' << r.ambiguous << ',' << r.mean_candidate_ratio << ','
       << r.mean_probe_ratio << ',' << seed << '\n';
  }
}

}  // namespace resobdd
