#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "resobdd/diagram.hpp"

using namespace resobdd;

namespace {

std::vector<std::uint8_t> bits(std::initializer_list<int> v) {
  return std::vector<std::uint8_t>(v.begin(), v.end());
}

Diagram parity_tree(std::uint32_t n) {
  oracle::Table t(std::size_t{1} << n);
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = __builtin_popcountll(a) & 1;
  return decision_tree(n, t);
}

}  // namespace

TEST_SUITE("bdd_core") {

TEST_CASE("fnv1a hash is the 64-bit FNV-1a of the little-endian child ids") {
  // Reference computed byte by byte over 00 00 00 00 01 00 00 00.
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : {0, 0, 0, 0, 1, 0, 0, 0}) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  CHECK(fnv1a_pair(kTerm0, kTerm1) == h);
  UniqueTable t(3, 256);
  CHECK(t.bucket_of(kTerm0, kTerm1) == h % 256);
}

TEST_CASE("mk_node applies the deletion rule in ROBDD mode") {
  DiagramStore s(4);
  NodeId x = s.mk_node(3, kTerm0, kTerm1);
  CHECK(s.mk_node(2, x, x) == x);
}

TEST_CASE("mk_node hash-conses identical triples") {
  DiagramStore s(4);
  NodeId a = s.mk_node(2, kTerm0, kTerm1);
  NodeId b = s.mk_node(3, kTerm1, kTerm0);
  CHECK(s.mk_node(1, a, b) == s.mk_node(1, a, b));
  CHECK(s.arena_size() == 3);
}

TEST_CASE("mk_node keeps redundant nodes in KeepRedundant mode") {
  DiagramStore s(4, ReductionMode::KeepRedundant);
  NodeId x = s.mk_node(3, kTerm0, kTerm1);
  NodeId r = s.mk_node(2, x, x);
  CHECK(r != x);
  CHECK(s.node(r).redundant());
  CHECK(s.mk_node(2, x, x) == r);
}

TEST_CASE("mk_node rejects ordering violations") {
  DiagramStore s(4);
  NodeId x = s.mk_node(2, kTerm0, kTerm1);
  CHECK_THROWS_AS((void)s.mk_node(2, x, kTerm1), StructuralError);
  CHECK_THROWS_AS((void)s.mk_node(3, x, kTerm0), StructuralError);
  CHECK_THROWS_AS((void)s.mk_node(4, kTerm0, kTerm1), StructuralError);
}

TEST_CASE("unique table lists every node exactly once under its key") {
  auto f = fixtures::cost_example();
  const auto& t = f.d.store().table();
  for (NodeId id : preorder(f.d)) {
    const Node& n = f.d.node(id);
    auto chain = t.chain(n.index, t.bucket_of(n.lo, n.hi));
    CHECK(std::count(chain.begin(), chain.end(), id) == 1);
    CHECK(f.d.store().find(n.index, n.lo, n.hi) == id);
  }
}

TEST_CASE("evaluate follows the 0/1 path on the five-variable fixture") {
  auto f = fixtures::cost_example();
  CHECK_FALSE(evaluate(f.d, bits({0, 0, 0, 0, 0})));
  CHECK_FALSE(evaluate(f.d, bits({0, 0, 0, 0, 1})));
  CHECK(evaluate(f.d, bits({1, 1, 0, 0, 0})));
  CHECK_THROWS_AS((void)evaluate(f.d, bits({1, 1})), UsageError);
}

TEST_CASE("from_cubes matches the cube oracle") {
  SUBCASE("single literal") {
    std::vector<std::string> on{"1-"};
    Diagram d = from_cubes(2, on);
    CHECK(count_nodes(d) == 1);
    CHECK(d.node(d.root()).index == 0);
    CHECK(truth_table(d) == oracle::from_cubes(2, on));
  }
  SUBCASE("empty onset") {
    Diagram d = from_cubes(1, {});
    CHECK(d.root() == kTerm0);
  }
  SUBCASE("two cubes over three variables") {
    std::vector<std::string> on{"11-", "--1"};
    Diagram d = from_cubes(3, on);
    // Assignments written x0 x1 x2: 011 111 001 101 110 evaluate to 1.
    for (auto a : {"011", "111", "001", "101", "110"}) {
      std::vector<std::uint8_t> v;
      for (const char* p = a; *p; ++p) v.push_back(*p - '0');
      CHECK(evaluate(d, v));
    }
    for (auto a : {"000", "100", "010"}) {
      std::vector<std::uint8_t> v;
      for (const char* p = a; *p; ++p) v.push_back(*p - '0');
      CHECK_FALSE(evaluate(d, v));
    }
  }
  SUBCASE("don't-care cubes only with dc_as_one") {
    std::vector<std::string> on{"1-"};
    std::vector<std::string> dc{"01"};
    CHECK(truth_table(from_cubes(2, on, dc, false)) == oracle::from_cubes(2, on));
    CHECK(truth_table(from_cubes(2, on, dc, true)) == oracle::from_cubes(2, {"1-", "01"}));
  }
  SUBCASE("malformed cubes") {
    std::vector<std::string> bad_len{"1"};
    std::vector<std::string> bad_char{"1x"};
    CHECK_THROWS_AS((void)from_cubes(2, bad_len), ParseError);
    CHECK_THROWS_AS((void)from_cubes(2, bad_char), ParseError);
  }
  SUBCASE("random covers") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
      std::uint32_t n = 1 + rng() % 9;
      auto cubes = oracle::random_cubes(n, rng() % 8, rng);
      CHECK(truth_table(from_cubes(n, cubes)) == oracle::from_cubes(n, cubes));
    }
  }
}

TEST_CASE("reduce_robdd on parity and constants") {
  Diagram tree = parity_tree(3);
  CHECK(count_nodes(tree) == 7);
  Diagram r = reduce_robdd(tree);
  CHECK(count_nodes(r) == 5);
  CHECK(isomorphic(reduce_robdd(r), r));
  CHECK(truth_table(r) == truth_table(tree));

  oracle::Table ones(8, true);
  CHECK(reduce_robdd(decision_tree(3, ones)).root() == kTerm1);
}

TEST_CASE("reduce_robdd is canonical and sound on random functions") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    std::uint32_t n = 1 + rng() % 10;
    auto t = oracle::random_table(n, rng, 0.3 + 0.4 * (k % 2));
    Diagram r = reduce_robdd(decision_tree(n, t));
    CHECK(truth_table(r) == t);
    CHECK(count_nodes(r) == oracle::ro_count(t, n));
    // Second route: a cube per minterm, in reverse order.
    std::vector<std::string> cubes;
    for (std::size_t a = t.size(); a-- > 0;) {
      if (!t[a]) continue;
      std::string c(n, '0');
      for (std::uint32_t i = 0; i < n; ++i) c[i] = (a >> i) & 1 ? '1' : '0';
      cubes.push_back(c);
    }
    CHECK(isomorphic(from_cubes(n, cubes), r));
  }
}

TEST_CASE("restrict") {
  auto f = fixtures::cost_example();
  Diagram r = restrict(f.d, 0, false);
  CHECK(count_nodes(r) <= count_nodes(f.d));
  for (std::uint64_t a = 0; a < 32; ++a) {
    CHECK(evaluate_bits(r, a) == evaluate_bits(f.d, a & ~1ULL));
  }
  // Cofactor x0 = 0 is the function rooted at b.
  CHECK(isomorphic(r, reduce_robdd(Diagram(f.d.shared_store(), f["b"]))));

  CHECK(restrict(Diagram::constant(3, true), 1, false).root() == kTerm1);
  CHECK(restrict(fixtures::literal(4, 2), 2, true).root() == kTerm1);
}

TEST_CASE("negate") {
  CHECK(negate(Diagram::constant(2, false)).root() == kTerm1);
  auto f = fixtures::cost_example();
  Diagram nn = negate(negate(f.d));
  CHECK(truth_table(nn) == truth_table(f.d));
  CHECK(evaluate(negate(f.d), bits({0, 0, 0, 0, 0})));
}

TEST_CASE("count_nodes and export_dot") {
  CHECK(count_nodes(fixtures::cost_example().d) == 6);
  CHECK(count_nodes(Diagram::constant(4, true)) == 0);
  CHECK(count_nodes(reduce_robdd(parity_tree(3))) == 5);

  std::string dot = export_dot(fixtures::cost_example().d, "ex");
  CHECK(dot.find("digraph ex") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
}

TEST_CASE("rebuild is deterministic in ids and preserves structure") {
  auto f = fixtures::edge_example();
  Diagram a = rebuild(f.d, {}, ReductionMode::Robdd, 256);
  Diagram b = rebuild(f.d, {}, ReductionMode::Robdd, 1024);
  CHECK(a.root() == b.root());
  CHECK(preorder(a) == preorder(b));
  CHECK(isomorphic(a, f.d));
  CHECK(b.store().table().bucket_count() == 1024);
}

TEST_CASE("mergeable_groups and is_ordered") {
  DiagramStore s(3, ReductionMode::KeepRedundant);
  auto sp = std::shared_ptr<DiagramStore>(&s, [](DiagramStore*) {});
  NodeId x = s.add_node(2, kTerm0, kTerm1);
  NodeId y = s.add_node(2, kTerm0, kTerm1);
  NodeId r = s.add_node(1, x, y);
  NodeId root = s.add_node(0, r, x);
  Diagram d(sp, root);
  auto groups = mergeable_groups(d);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].size() == 2);
  CHECK(is_ordered(d));
}

}  // TEST_SUITE
