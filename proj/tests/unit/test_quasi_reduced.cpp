#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "resobdd/apply.hpp"
#include "resobdd/quasi_reduced.hpp"

using namespace resobdd;

TEST_SUITE("quasi_reduced") {

TEST_CASE("build_qr of parity is the ROBDD shape") {
  oracle::Table t(8);
  for (std::size_t a = 0; a < 8; ++a) t[a] = __builtin_popcountll(a) & 1;
  Diagram qr = build_qr(decision_tree(3, t));
  CHECK(count_nodes(qr) == 5);
  CHECK(has_level_discipline(qr));
}

TEST_CASE("build_qr of a constant keeps a redundant chain") {
  Diagram qr = build_qr(Diagram::constant(2, false));
  CHECK(count_nodes(qr) == 2);
  for (NodeId id : preorder(qr)) CHECK(qr.node(id).redundant());
  NodeId below = qr.node(qr.root()).lo;
  CHECK(qr.node(below).lo == kTerm0);
}

TEST_CASE("build_qr counts match the cofactor oracle") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 40; ++k) {
    std::uint32_t n = 1 + rng() % 10;
    auto t = oracle::random_table(n, rng, k % 3 == 0 ? 0.1 : 0.5);
    Diagram ro = reduce_robdd(decision_tree(n, t));
    Diagram qr = build_qr(ro);
    CHECK(count_nodes(qr) == oracle::qr_count(t, n));
    CHECK(count_nodes(ro) <= count_nodes(qr));
    CHECK(truth_table(qr) == t);
    CHECK(has_level_discipline(qr));
    CHECK(mergeable_groups(qr).empty());
    CHECK(isomorphic(qr, build_qr(decision_tree(n, t))));
  }
}

TEST_CASE("pad_chains inserts one node per skipped level") {
  auto s = std::make_shared<DiagramStore>(4);
  NodeId x3 = s->mk_node(3, kTerm0, kTerm1);
  NodeId root = s->mk_node(0, x3, kTerm1);
  Diagram d(s, root);
  Diagram p = pad_chains(d);
  // 0-edge 0 -> 3 gets levels 1, 2; 1-edge 0 -> terminal gets levels 1, 2, 3.
  CHECK(count_nodes(p) == 1 + 1 + 2 + 3);
  CHECK(has_level_discipline(p));
  CHECK(truth_table(p) == truth_table(d));
}

TEST_CASE("pad_chains on the five-variable fixture") {
  auto f = fixtures::cost_example();
  Diagram p = pad_chains(f.d);
  CHECK(has_level_discipline(p));
  CHECK(truth_table(p) == truth_table(f.d));
  // c = [1, T0, f]: its 1-edge gets levels 2, 3 above f.
  NodeId c = p.node(p.root()).hi;
  CHECK(p.node(c).index == 1);
  NodeId n2 = p.node(c).hi;
  NodeId n3 = p.node(n2).lo;
  CHECK(p.node(n2).index == 2);
  CHECK(p.node(n2).redundant());
  CHECK(p.node(n3).index == 3);
  CHECK(p.node(n3).redundant());
  CHECK(p.node(p.node(n3).lo).index == 4);
}

TEST_CASE("pad_chains leaves a quasi-reduced input unchanged") {
  std::mt19937_64 rng(2);
  auto t = oracle::random_table(6, rng);
  Diagram qr = build_qr(decision_tree(6, t));
  CHECK(isomorphic(pad_chains(qr), qr));
}

TEST_CASE("merge_quadratic") {
  SUBCASE("two copies of a subtree collapse") {
    auto s = std::make_shared<DiagramStore>(2, ReductionMode::KeepRedundant);
    NodeId a = s->add_node(1, kTerm0, kTerm1);
    NodeId b = s->add_node(1, kTerm0, kTerm1);
    Diagram d(s, s->add_node(0, a, b));
    Diagram m = merge_quadratic(d);
    CHECK(count_nodes(m) == 2);
  }
  SUBCASE("padded apply output equals build_qr") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
      std::uint32_t n = 2 + rng() % 8;
      Diagram f = reduce_robdd(decision_tree(n, oracle::random_table(n, rng)));
      Diagram g = reduce_robdd(decision_tree(n, oracle::random_table(n, rng)));
      Diagram r = apply(BoolOp::And, f, g);
      Diagram m = merge_quadratic(pad_chains(r));
      CHECK(isomorphic(m, build_qr(r)));
    }
  }
  SUBCASE("idempotent") {
    std::mt19937_64 rng(4);
    Diagram qr = build_qr(decision_tree(5, oracle::random_table(5, rng)));
    CHECK(isomorphic(merge_quadratic(qr), qr));
  }
  SUBCASE("long edges are a contract violation") {
    CHECK_THROWS_AS((void)merge_quadratic(fixtures::cost_example().d), ContractViolation);
  }
}

}  // TEST_SUITE
