#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "resobdd/diagram.hpp"
#include "resobdd/fault.hpp"

namespace resobdd {

enum class Edge : std::uint8_t { Zero = 0, One = 1 };

/// Trusted DFS linearisation of a diagram, 0-edge first, each node once.
/// Terminals are ordinary entries with null children.
class NodeVector {
 public:
  struct Entry {
    NodeId id;
    Level level;
    NodeId lo;
    NodeId hi;
  };

  explicit NodeVector(const Diagram& d);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const Entry& operator[](std::size_t p) const { return entries_[p]; }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t position_of(NodeId id) const;
  [[nodiscard]] bool contains(NodeId id) const { return pos_.count(id) != 0; }
  /// Reachable entries (terminals included) of the subgraph rooted at `id`.
  [[nodiscard]] std::size_t subgraph_size(NodeId id) const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<NodeId, std::size_t> pos_;
  std::vector<std::size_t> sub_;  // by position
};

/// p + 1 for the 0-edge, p + |B_0| + 1 for the 1-edge.
[[nodiscard]] std::size_t child_bound(const NodeVector& v, NodeId node, Edge edge);

/// Entries at positions 0..bound whose level exceeds the node's level, in
/// ascending position.
[[nodiscard]] std::vector<NodeId> candidate_set(const NodeVector& v, NodeId node,
                                                std::size_t bound);

enum class EdgeStatus : std::uint8_t { Recovered, Ambiguous, NoMatch };

struct EdgeRecovery {
  EdgeStatus status = EdgeStatus::NoMatch;
  NodeId child;                  ///< valid when Recovered
  std::vector<NodeId> matches;   ///< every matching candidate seen
  std::size_t candidates = 0;    ///< |S|
  std::size_t probes = 0;        ///< unique-table lookups issued
};

/// Rebuilds the corrupted `edge` of `node` from the trusted vector, the
/// intact sibling edge and the safe unique table. Fast mode returns the first
/// matching candidate; strict mode scans them all and reports ambiguity when
/// more than one matches. Nothing is written back.
[[nodiscard]] EdgeRecovery reconstruct_edge(const Diagram& d, const NodeVector& v, NodeId node,
                                            Edge edge, bool strict = false);

/// Fast-mode failure: the wrong child returned and where both keys hashed.
struct CollisionLog {
  NodeId node;
  Edge edge;
  NodeId truth;
  NodeId returned;
  std::size_t true_bucket;
  std::size_t returned_bucket;
};

struct EdgeCampaignRow {
  std::size_t table_size = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t ambiguous = 0;
  std::size_t wrong = 0;
  std::size_t no_match = 0;
  double mean_candidate_ratio = 0.0;  ///< mean |S| / |vector|
  double mean_probe_ratio = 0.0;      ///< mean probes / |vector|
  std::vector<CollisionLog> failures;

  [[nodiscard]] double success_rate() const {
    return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
  }
};

struct EdgeCampaignConfig {
  std::vector<std::size_t> table_sizes{256, 1024, 2048};
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  bool strict = false;
};

/// For each table size: copies `d` into a store with that many buckets (node
/// ids are identical across copies). Each trial corrupts one edge, reconstructs
/// it and restores the original. The same
/// seed yields the same picks for every size.
[[nodiscard]] std::vector<EdgeCampaignRow> edge_campaign(const Diagram& d,
                                                         const EdgeCampaignConfig& cfg);

void write_campaign_csv_header(std::ostream& os);
void write_campaign_csv(std::ostream& os, const std::string& benchmark, std::size_t output_idx,
                        std::uint64_t seed, const std::vector<EdgeCampaignRow>& rows);

}  // namespace resobdd
