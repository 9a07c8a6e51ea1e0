#include <doctest.h>

#include "isofam/order.hpp"

using namespace isofam;

TEST_CASE("closure of the identity relation is discrete") {
  StepRelation rel{3, BitMatrix(3)};
  for (int i = 0; i < 3; ++i) rel.step.set(i, i);
  PartialOrder po = close(rel);
  CHECK(po.hasse.empty());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(po.le(i, j) == (i == j));
}

TEST_CASE("two-cycles are rejected with a witness") {
  StepRelation rel{2, BitMatrix(2)};
  rel.step.set(0, 1);
  rel.step.set(1, 0);
  CHECK_THROWS_AS(close(rel), VerifyError);
}

TEST_CASE("closure is transitive") {
  StepRelation rel{4, BitMatrix(4)};
  rel.step.set(0, 1);
  rel.step.set(1, 2);
  rel.step.set(2, 3);
  PartialOrder po = close(rel);
  CHECK(po.le(0, 3));
  CHECK(po.hasse == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("chain order on the family table") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  PhiTable table = enumerate_phi(q5);
  PartialOrder po = close(phi_step(table));

  int zero = table.index_of(BitVector::zero(4));
  REQUIRE(zero >= 0);
  for (int i = 0; i < table.size(); ++i) {
    CHECK(po.le(zero, i));  // empty family below everything
    CHECK(po.le(i, i));
  }

  int mid = table.index_of(q5.e(2));
  int arc = table.index_of(q5.vector_of(q5.vertex_mask({1, 2, 3})));
  REQUIRE(mid >= 0);
  REQUIRE(arc >= 0);
  CHECK(po.le(mid, arc));
  CHECK_FALSE(po.le(arc, mid));

  int single = table.index_of(q5.e(1));
  int pair13 = table.index_of(q5.e(1) ^ q5.e(3));
  CHECK(po.le(single, pair13));
  CHECK_FALSE(po.le(pair13, single));
}

TEST_CASE("topological order respects the relation") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  PhiTable table = enumerate_phi(q5);
  PartialOrder po = close(phi_step(table));
  std::vector<std::uint64_t> keys(table.size());
  for (int i = 0; i < table.size(); ++i) keys[i] = table.records[i].eps.bits;
  std::vector<int> topo = topological_order(po, keys);
  std::vector<int> pos(table.size());
  for (int p = 0; p < table.size(); ++p) pos[topo[p]] = p;
  for (int a = 0; a < table.size(); ++a)
    for (int b = 0; b < table.size(); ++b)
      if (a != b && po.le(a, b)) CHECK(pos[a] < pos[b]);
}

TEST_CASE("exports") {
  Setup q3 = build_setup(GraphCase::CycleQuotient, 3);
  PhiTable table = enumerate_phi(q3);
  PartialOrder po = close(phi_step(table));
  CHECK(po.hasse.size() == 3);  // three covers over the empty family
  std::vector<std::string> labels{"0", "1", "2", "3"};
  std::string dot = hasse_dot(po, labels);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  std::string csv = hasse_csv(po, labels);
  CHECK(csv == "from,to\n0,1\n0,2\n0,3\n");
}
