#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "resobdd/fault_lab.hpp"
#include "resobdd/index_resilient.hpp"
#include "resobdd/quasi_reduced.hpp"

using namespace resobdd;

namespace {

struct Built {
  std::shared_ptr<DiagramStore> s;
  std::map<std::string, NodeId> at;
  Diagram diagram(const std::string& root) const { return Diagram(s, at.at(root)); }
};

// Q=[0,R1,S1]; R1,R2,R3 a redundant run over T1; S1 a non-redundant subgraph.
Built straight_chain() {
  Built b{std::make_shared<DiagramStore>(4, ReductionMode::KeepRedundant), {}};
  auto& m = b.at;
  auto& s = *b.s;
  m["A3"] = s.add_node(3, kTerm0, kTerm1);
  m["B3"] = s.add_node(3, kTerm1, kTerm0);
  m["A2"] = s.add_node(2, m["A3"], m["B3"]);
  m["B2"] = s.add_node(2, m["B3"], m["A3"]);
  m["S1"] = s.add_node(1, m["A2"], m["B2"]);
  m["R3"] = s.add_node(3, kTerm1, kTerm1);
  m["R2"] = s.add_node(2, m["R3"], m["R3"]);
  m["R1"] = s.add_node(1, m["R2"], m["R2"]);
  m["Q"] = s.add_node(0, m["R1"], m["S1"]);
  return b;
}

// R2 is the 1-child of P1, whose 0-child X2 is redundant too: numP(R2) = 2.
Built blocked_chain() {
  Built b{std::make_shared<DiagramStore>(4, ReductionMode::KeepRedundant), {}};
  auto& m = b.at;
  auto& s = *b.s;
  m["A3"] = s.add_node(3, kTerm0, kTerm1);
  m["R3"] = s.add_node(3, kTerm0, kTerm0);
  m["R2"] = s.add_node(2, m["R3"], m["R3"]);
  m["X2"] = s.add_node(2, m["A3"], m["A3"]);
  m["R1"] = s.add_node(1, m["R2"], m["R2"]);
  m["P1"] = s.add_node(1, m["X2"], m["R2"]);
  m["Q"] = s.add_node(0, m["R1"], m["P1"]);
  return b;
}

Diagram ir_of(const oracle::Table& t, std::uint32_t n) {
  return ir_reduce(build_qr(decision_tree(n, t)));
}

}  // namespace

TEST_SUITE("index_resilient") {

TEST_CASE("numP property 1: only the 1-child of two redundant children counts") {
  auto s = std::make_shared<DiagramStore>(3, ReductionMode::KeepRedundant);
  NodeId x = s->add_node(2, kTerm0, kTerm1);
  NodeId y = s->add_node(2, kTerm1, kTerm0);
  NodeId a = s->add_node(1, x, x);
  NodeId b = s->add_node(1, y, y);
  Diagram d(s, s->add_node(0, a, b));
  NumPMap np = compute_numP(d);
  CHECK(np.at(a) == 0u);
  CHECK(np.at(b) == 1u);
  CHECK_FALSE(np.at(x).has_value());
  Diagram ir = ir_reduce(d);
  CHECK(count_nodes(ir) == 4);
  CHECK(ir.node(ir.root()).lo != ir.node(ir.root()).hi);
  CHECK(is_index_resilient(ir));
}

TEST_CASE("numP of a redundant root is zero") {
  auto s = std::make_shared<DiagramStore>(2, ReductionMode::KeepRedundant);
  NodeId x = s->add_node(1, kTerm0, kTerm1);
  Diagram d(s, s->add_node(0, x, x));
  CHECK(compute_numP(d).at(d.root()) == 0u);
  Diagram ir = ir_reduce(d);
  CHECK(count_nodes(ir) == 1);
}

TEST_CASE("numP property 2: sibling more than one level down") {
  auto s = std::make_shared<DiagramStore>(4, ReductionMode::KeepRedundant);
  NodeId z = s->add_node(2, kTerm0, kTerm1);
  NodeId w = s->add_node(2, kTerm1, kTerm0);
  NodeId b = s->add_node(1, w, w);
  Diagram d(s, s->add_node(0, z, b));
  CHECK(compute_numP(d).at(b) == 1u);
}

TEST_CASE("a maximal chain is removed as a whole") {
  Built b = straight_chain();
  Diagram d = b.diagram("Q");
  NumPMap np = compute_numP(d);
  CHECK(np.at(b.at["R1"]) == 0u);
  CHECK(np.at(b.at["R2"]) == 1u);
  CHECK(np.at(b.at["R3"]) == 1u);
  ChainPlan plan = find_chains(d, np);
  REQUIRE(plan.chains.size() == 1);
  CHECK(plan.chains[0].head == b.at["R1"]);
  CHECK(plan.chains[0].members == std::vector<NodeId>{b.at["R2"], b.at["R3"]});
  CHECK(plan.chains[0].child == kTerm1);
  Diagram ir = ir_reduce(d);
  CHECK(count_nodes(ir) == 6);
  CHECK(ir.node(ir.root()).lo == kTerm1);
  CHECK(is_ir_reduced(ir));
}

TEST_CASE("a member with numP above one stops the chain") {
  Built b = blocked_chain();
  Diagram d = b.diagram("Q");
  NumPMap np = compute_numP(d);
  CHECK(np.at(b.at["R1"]) == 0u);
  CHECK(np.at(b.at["R2"]) == 2u);
  CHECK(np.at(b.at["X2"]) == 0u);
  CHECK(np.at(b.at["R3"]) == 1u);
  ChainPlan plan = find_chains(d, np);
  CHECK(plan.flagged(b.at["R1"]));
  CHECK(plan.flagged(b.at["X2"]));
  CHECK_FALSE(plan.flagged(b.at["R2"]));
  CHECK_FALSE(plan.flagged(b.at["R3"]));
  Diagram ir = ir_reduce(d);
  CHECK(count_nodes(ir) == 5);
  CHECK(is_ir_reduced(ir));
  CHECK(truth_table(ir) == truth_table(d));
}

TEST_CASE("single redundant node over a non-redundant child is a chain of one") {
  auto s = std::make_shared<DiagramStore>(3, ReductionMode::KeepRedundant);
  NodeId x = s->add_node(2, kTerm0, kTerm1);
  NodeId y = s->add_node(2, kTerm1, kTerm0);
  NodeId r = s->add_node(1, x, x);
  NodeId t = s->add_node(1, x, y);
  Diagram d(s, s->add_node(0, r, t));
  ChainPlan plan = find_chains(d, compute_numP(d));
  REQUIRE(plan.chains.size() == 1);
  CHECK(plan.chains[0].members.empty());
  CHECK(plan.chains[0].child == x);
}

TEST_CASE("ir_reduce rejects mergeable input") {
  auto s = std::make_shared<DiagramStore>(2, ReductionMode::KeepRedundant);
  NodeId a = s->add_node(1, kTerm0, kTerm1);
  NodeId b = s->add_node(1, kTerm0, kTerm1);
  CHECK_THROWS_AS((void)ir_reduce(Diagram(s, s->add_node(0, a, b))), ContractViolation);
}

TEST_CASE("parity QR has nothing to remove") {
  oracle::Table t(16);
  for (std::size_t a = 0; a < 16; ++a) t[a] = __builtin_popcountll(a) & 1;
  Diagram qr = build_qr(decision_tree(4, t));
  CHECK(isomorphic(ir_reduce(qr), qr));
}

TEST_CASE("predicates on the reference diagrams") {
  CHECK_FALSE(is_index_resilient(fixtures::cost_example().d));
  // not x3 and ((not x0 and not x1) or not x2)
  oracle::Table t(16);
  for (std::size_t a = 0; a < 16; ++a) {
    bool x0 = a & 1, x1 = a & 2, x2 = a & 4, x3 = a & 8;
    t[a] = !x3 && ((!x0 && !x1) || !x2);
  }
  Diagram ro = reduce_robdd(decision_tree(4, t));
  CHECK(is_index_resilient(ro));
  CHECK(cost_report(ro).mean() == doctest::Approx(1.0));

  std::mt19937_64 rng(1);
  CHECK(is_index_resilient(build_qr(decision_tree(5, oracle::random_table(5, rng)))));
}

TEST_CASE("random functions: IR invariants, sandwich, canonicity") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 60; ++k) {
    std::uint32_t n = 1 + rng() % 10;
    auto t = oracle::random_table(n, rng, k % 4 == 0 ? 0.15 : 0.5);
    Diagram ir = ir_of(t, n);
    CHECK(truth_table(ir) == t);
    CHECK(is_index_resilient(ir));
    CHECK(is_ir_reduced(ir));
    for (NodeId id : preorder(ir)) {
      const Node& nd = ir.node(id);
      CHECK(nd.index + 1 == std::min(ir.level(nd.lo), ir.level(nd.hi)));
    }
    const std::size_t ro = oracle::ro_count(t, n);
    const std::size_t qr = oracle::qr_count(t, n);
    CHECK(ro <= count_nodes(ir));
    CHECK(count_nodes(ir) <= qr);
    // Same function through a different ROBDD store.
    Diagram other = ir_reduce(build_qr(reduce_robdd(decision_tree(n, t))));
    CHECK(isomorphic(ir, other));
  }
}

TEST_CASE("removing one maximal chain at a time keeps index resilience") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 30; ++k) {
    std::uint32_t n = 3 + rng() % 6;
    Diagram qr = build_qr(decision_tree(n, oracle::random_table(n, rng, 0.2)));
    ChainPlan plan = find_chains(qr, compute_numP(qr));
    std::vector<int> owner(qr.store().arena_size(), 0);
    for (const Chain& c : plan.chains) {
      std::vector<char> flags(qr.store().arena_size(), 0);
      flags[slot_of(c.head)] = 1;
      CHECK(++owner[slot_of(c.head)] == 1);
      for (NodeId m : c.members) {
        flags[slot_of(m)] = 1;
        CHECK(++owner[slot_of(m)] == 1);
      }
      Diagram one = remove_flagged(qr, flags);
      CHECK(is_index_resilient(one));
      CHECK(truth_table(one) == truth_table(qr));
    }
  }
}

}  // TEST_SUITE
