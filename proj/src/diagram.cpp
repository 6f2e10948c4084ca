#include "resobdd/diagram.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace resobdd {

DiagramStore::DiagramStore(std::uint32_t num_vars, ReductionMode mode,
                           std::size_t bucket_count)
    : num_vars_(num_vars), mode_(mode), table_(num_vars, bucket_count) {}

const Node& DiagramStore::node(NodeId id) const {
  if (id.is_terminal() || !contains(id)) {
    throw StructuralError("node id " + std::to_string(id.value) + " is not an arena node");
  }
  return nodes_[slot_of(id)];
}

Node& DiagramStore::raw_node(NodeId id) {
  if (id.is_terminal() || !contains(id)) {
    throw StructuralError("node id " + std::to_string(id.value) + " is not an arena node");
  }
  return nodes_[slot_of(id)];
}

void DiagramStore::check_ordering(Level index, NodeId lo, NodeId hi) const {
  if (index >= num_vars_) {
    throw StructuralError("variable index " + std::to_string(index) + " out of range");
  }
  if (!contains(lo) || !contains(hi)) throw StructuralError("child id not in store");
  if (level(lo) <= index || level(hi) <= index) {
    throw StructuralError("ordering violated at index " + std::to_string(index));
  }
}

NodeId DiagramStore::find(Level index, NodeId lo, NodeId hi) const {
  for (NodeId id : table_.chain(index, table_.bucket_of(lo, hi))) {
    const Node& n = nodes_[slot_of(id)];
    if (n.index == index && n.lo == lo && n.hi == hi) return id;
  }
  return kNoNode;
}

NodeId DiagramStore::mk_node(Level index, NodeId lo, NodeId hi) {
  check_ordering(index, lo, hi);
  if (mode_ == ReductionMode::Robdd && lo == hi) return lo;
  if (NodeId existing = find(index, lo, hi); !existing.is_null()) return existing;
  return add_node(index, lo, hi);
}

NodeId DiagramStore::add_node(Level index, NodeId lo, NodeId hi) {
  check_ordering(index, lo, hi);
  NodeId id = id_of_slot(nodes_.size());
  nodes_.push_back(Node{index, lo, hi});
  table_.insert(index, lo, hi, id);
  return id;
}

Diagram::Diagram(std::shared_ptr<DiagramStore> store, NodeId root)
    : store_(std::move(store)), root_(root) {
  if (!store_) throw UsageError("diagram without store");
  if (!store_->contains(root_)) throw StructuralError("root not in store");
}

Diagram Diagram::constant(std::uint32_t num_vars, bool value, ReductionMode mode) {
  return Diagram(std::make_shared<DiagramStore>(num_vars, mode), terminal(value));
}

namespace {

template <class Visit>
void dfs(const Diagram& d, NodeId id, std::vector<char>& seen, Visit& visit) {
  if (id.is_terminal()) return;
  auto s = slot_of(id);
  if (seen[s]) return;
  seen[s] = 1;
  const Node& n = d.node(id);
  visit.pre(id);
  dfs(d, n.lo, seen, visit);
  dfs(d, n.hi, seen, visit);
  visit.post(id);
}

struct OrderCollector {
  std::vector<NodeId> pre_order, post_order;
  void pre(NodeId id) { pre_order.push_back(id); }
  void post(NodeId id) { post_order.push_back(id); }
};

OrderCollector collect(const Diagram& d) {
  OrderCollector c;
  std::vector<char> seen(d.store().arena_size(), 0);
  dfs(d, d.root(), seen, c);
  return c;
}

}  // namespace

std::vector<NodeId> postorder(const Diagram& d) { return collect(d).post_order; }
std::vector<NodeId> preorder(const Diagram& d) { return collect(d).pre_order; }

std::vector<std::vector<NodeId>> nodes_by_level(const Diagram& d) {
  std::vector<std::vector<NodeId>> levels(d.num_vars());
  for (NodeId id : preorder(d)) {
    Level l = d.node(id).index;
    if (l >= levels.size()) throw StructuralError("stored level out of range");
    levels[l].push_back(id);
  }
  return levels;
}

std::size_t count_nodes(const Diagram& d) { return preorder(d).size(); }

bool evaluate(const Diagram& d, std::span<const std::uint8_t> assignment) {
  if (assignment.size() != d.num_vars()) {
    throw UsageError("assignment has " + std::to_string(assignment.size()) +
                     " values, diagram has " + std::to_string(d.num_vars()) + " variables");
  }
  NodeId cur = d.root();
  while (!cur.is_terminal()) {
    const Node& n = d.node(cur);
    cur = assignment[n.index] ? n.hi : n.lo;
  }
  return cur == kTerm1;
}

bool evaluate_bits(const Diagram& d, std::uint64_t bits) {
  if (d.num_vars() > 64) throw UsageError("evaluate_bits supports at most 64 variables");
  NodeId cur = d.root();
  while (!cur.is_terminal()) {
    const Node& n = d.node(cur);
    cur = ((bits >> n.index) & 1u) ? n.hi : n.lo;
  }
  return cur == kTerm1;
}

std::vector<bool> truth_table(const Diagram& d) {
  if (d.num_vars() > 24) throw UsageError("truth table limited to 24 variables");
  std::uint64_t count = std::uint64_t{1} << d.num_vars();
  std::vector<bool> table(count);
  for (std::uint64_t a = 0; a < count; ++a) table[a] = evaluate_bits(d, a);
  return table;
}

Diagram decision_tree(std::uint32_t num_vars, const std::vector<bool>& table) {
  if (num_vars > 24) throw UsageError("decision tree limited to 24 variables");
  if (table.size() != (std::size_t{1} << num_vars)) {
    throw UsageError("truth table size does not match variable count");
  }
  auto store = std::make_shared<DiagramStore>(num_vars, ReductionMode::KeepRedundant);
  // build(level, prefix): prefix holds x_0..x_{level-1} in its low bits.
  std::function<NodeId(Level, std::uint64_t)> build = [&](Level level,
                                                          std::uint64_t prefix) -> NodeId {
    if (level == num_vars) return terminal(table[prefix]);
    NodeId lo = build(level + 1, prefix);
    NodeId hi = build(level + 1, prefix | (std::uint64_t{1} << level));
    return store->add_node(level, lo, hi);
  };
  NodeId root = build(0, 0);
  return Diagram(std::move(store), root);
}

bool cube_matches(std::string_view cube, std::uint64_t bits) {
  for (std::size_t i = 0; i < cube.size(); ++i) {
    bool bit = (bits >> i) & 1u;
    switch (cube[i]) {
      case '0':
        if (bit) return false;
        break;
      case '1':
        if (!bit) return false;
        break;
      case '-':
      case '2':
        break;
      default:
        throw UsageError(std::string("bad cube character '") + cube[i] + "'");
    }
  }
  return true;
}

Diagram reduce_robdd(const Diagram& d) {
  auto store = std::make_shared<DiagramStore>(d.num_vars(), ReductionMode::Robdd);
  std::unordered_map<NodeId, NodeId> map{{kTerm0, kTerm0}, {kTerm1, kTerm1}};
  for (NodeId id : postorder(d)) {
    const Node& n = d.node(id);
    map[id] = store->mk_node(n.index, map.at(n.lo), map.at(n.hi));
  }
  NodeId root = map.at(d.root());
  return Diagram(std::move(store), root);
}

Diagram restrict(const Diagram& d, Level var, bool value) {
  if (var >= d.num_vars()) throw UsageError("restrict: variable out of range");
  auto store = std::make_shared<DiagramStore>(d.num_vars(), ReductionMode::Robdd);
  std::unordered_map<NodeId, NodeId> map{{kTerm0, kTerm0}, {kTerm1, kTerm1}};
  for (NodeId id : postorder(d)) {
    const Node& n = d.node(id);
    if (n.index == var) {
      map[id] = map.at(value ? n.hi : n.lo);
    } else {
      map[id] = store->mk_node(n.index, map.at(n.lo), map.at(n.hi));
    }
  }
  NodeId root = map.at(d.root());
  return Diagram(std::move(store), root);
}

Diagram negate(const Diagram& d) {
  auto store = std::make_shared<DiagramStore>(d.num_vars(), d.store().mode(),
                                              d.store().table().bucket_count());
  std::unordered_map<NodeId, NodeId> map{{kTerm0, kTerm1}, {kTerm1, kTerm0}};
  for (NodeId id : postorder(d)) {
    const Node& n = d.node(id);
    map[id] = store->add_node(n.index, map.at(n.lo), map.at(n.hi));
  }
  NodeId root = map.at(d.root());
  return Diagram(std::move(store), root);
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.num_vars() != b.num_vars()) return false;
  std::unordered_map<NodeId, NodeId> fwd, bwd;
  std::function<bool(NodeId, NodeId)> walk = [&](NodeId x, NodeId y) -> bool {
    if (x.is_terminal() || y.is_terminal()) return x == y;
    auto f = fwd.find(x);
    auto r = bwd.find(y);
    if (f != fwd.end() || r != bwd.end()) {
      return f != fwd.end() && r != bwd.end() && f->second == y && r->second == x;
    }
    const Node& nx = a.node(x);
    const Node& ny = b.node(y);
    if (nx.index != ny.index) return false;
    if ((nx.lo == nx.hi) != (ny.lo == ny.hi)) return false;
    fwd.emplace(x, y);
    bwd.emplace(y, x);
    return walk(nx.lo, ny.lo) && walk(nx.hi, ny.hi);
  };
  return walk(a.root(), b.root());
}

bool is_ordered(const Diagram& d) {
  for (NodeId id : preorder(d)) {
    const Node& n = d.node(id);
    if (n.index >= d.level(n.lo) || n.index >= d.level(n.hi)) return false;
  }
  return true;
}

Diagram rebuild(const Diagram& d, const Redirect& redirect, ReductionMode mode,
                std::size_t bucket_count) {
  auto follow = [&](NodeId id) { return redirect ? redirect(id) : id; };
  auto store = std::make_shared<DiagramStore>(d.num_vars(), mode, bucket_count);
  std::unordered_map<NodeId, NodeId> map{{kTerm0, kTerm0}, {kTerm1, kTerm1}};
  std::function<NodeId(NodeId)> copy = [&](NodeId id) -> NodeId {
    id = follow(id);
    if (auto it = map.find(id); it != map.end()) return it->second;
    const Node n = d.node(id);
    NodeId lo = copy(n.lo);
    NodeId hi = copy(n.hi);
    NodeId fresh = store->add_node(n.index, lo, hi);
    map.emplace(id, fresh);
    return fresh;
  };
  NodeId root = copy(d.root());
  return Diagram(std::move(store), root);
}

std::vector<std::vector<NodeId>> mergeable_groups(const Diagram& d) {
  std::map<std::tuple<Level, std::uint32_t, std::uint32_t>, std::vector<NodeId>> by_key;
  for (NodeId id : preorder(d)) {
    const Node& n = d.node(id);
    by_key[{n.index, n.lo.value, n.hi.value}].push_back(id);
  }
  std::vector<std::vector<NodeId>> groups;
  for (auto& [key, ids] : by_key) {
    if (ids.size() > 1) groups.push_back(std::move(ids));
  }
  return groups;
}

std::string export_dot(const Diagram& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=circle];\n";
  out << "  t0 [shape=box,label=\"0\"];\n";
  out << "  t1 [shape=box,label=\"1\"];\n";
  auto ref = [](NodeId id) {
    if (id == kTerm0) return std::string("t0");
    if (id == kTerm1) return std::string("t1");
    return "n" + std::to_string(id.value);
  };
  for (const auto& level : nodes_by_level(d)) {
    if (level.empty()) continue;
    out << "  { rank=same;";
    for (NodeId id : level) out << ' ' << ref(id) << ';';
    out << " }\n";
  }
  for (NodeId id : preorder(d)) {
    const Node& n = d.node(id);
    out << "  " << ref(id) << " [label=\"x" << n.index << "\"];\n";
    out << "  " << ref(id) << " -> " << ref(n.lo) << " [style=dashed];\n";
    out << "  " << ref(id) << " -> " << ref(n.hi) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace resobdd
