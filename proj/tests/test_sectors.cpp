#include <doctest.h>

#include <set>

#include "isofam/sectors.hpp"

using namespace isofam;

TEST_CASE("default side data") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  SectorContext c5 = default_context(q5, {4, 5});
  CHECK(c5.J == q5.vertex_mask({1, 2}));
  CHECK(c5.tau == 4);

  Setup q7 = build_setup(GraphCase::CycleQuotient, 7);
  SectorContext c7 = default_context(q7, {6, 7});
  CHECK(c7.J == q7.vertex_mask({1, 2, 3, 4}));
  CHECK(c7.tau == 6);

  Setup q3 = build_setup(GraphCase::CycleQuotient, 3);
  SectorContext c3 = default_context(q3, {2, 3});
  CHECK(c3.J.is_zero());
  CHECK(c3.tau == 2);

  CHECK_THROWS_AS(validate_J(q5, {4, 5}, q5.vertex_mask({1, 4})), UsageError);
  CHECK_THROWS_AS(validate_J(q5, {4, 5}, q5.vertex_mask({1})), UsageError);
  CHECK_THROWS_AS(validate_J(q7, {6, 7}, q7.vertex_mask({1, 2, 4, 5})), UsageError);
}

TEST_CASE("support window") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  PhiTable t5 = enumerate_phi(q5);
  OmegaTable o5 = enumerate_omega(q5, t5, {4, 5});
  std::vector<int> in_J = omega_support_in(o5, q5.vertex_mask({1, 2}));
  REQUIRE(in_J.size() == 3);
  std::set<std::uint64_t> images;
  for (int i : in_J) images.insert(o5.records[i].eps_prime.bits);
  CHECK(images == std::set<std::uint64_t>{0, q5.e(1).bits, q5.e(2).bits});
}

TEST_CASE("edge-free images split into the window part and its shift") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  OmegaTable o5 = enumerate_omega(q5, enumerate_phi(q5), {4, 5});
  BitVector J = q5.vertex_mask({1, 2});
  std::set<std::uint64_t> j0, edge_free;
  for (const OmegaRecord& r : o5.records) {
    BitVector supp = support(q5, r.family);
    if (supp.test(4) || supp.test(5)) continue;
    edge_free.insert(r.eps_prime.bits);
    if (supp.subset_of(J)) j0.insert(r.eps_prime.bits);
  }
  CHECK(j0 == std::set<std::uint64_t>{0, q5.e(1).bits, q5.e(2).bits});
  std::set<std::uint64_t> j1;
  for (std::uint64_t m : edge_free)
    if (!j0.count(m)) j1.insert(m);
  CHECK(j1 == std::set<std::uint64_t>{q5.e(3).bits, (q5.e(1) ^ q5.e(3)).bits,
                                      (q5.e(1) ^ q5.e(2) ^ q5.e(3)).bits});
}

TEST_CASE("sector tables") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  PhiTable t5 = enumerate_phi(q5);
  OmegaTable o5 = enumerate_omega(q5, t5, {4, 5});
  SectorContext ctx = default_context(q5, {4, 5});

  CHECK(sign_classes(o5, true).size() == 4);
  CHECK(sign_classes(o5, false).size() == 4);

  for (bool plus : {true, false}) {
    SectorTable st = build_sector_table(o5, plus, ctx.tau, ctx.J);
    REQUIRE(st.size() == 4);  // 2^(N-3)
    for (const SectorEntry& e : st.entries) {
      // the lift collapses onto the entry class
      CHECK(st.collapse.project(o5.records[e.record].eps_prime).bits == e.y);
      // collapse preserves the span dimension (the bracket stays outside)
      CHECK(st.collapse.project(o5.records[e.record].span).dim() ==
            o5.records[e.record].span.dim());
    }
    // the class of zero lifts to the empty family on the plus side
    if (plus) {
      int z = st.index_of(0);
      REQUIRE(z >= 0);
      CHECK(o5.records[st.entries[z].record].family.empty());
      CHECK(st.entries[z].nu == 0);
    }

    PartialOrder lt = leq_tau(st);
    for (int i = 0; i < st.size(); ++i) CHECK(lt.le(i, i));
    if (plus) {
      int z = st.index_of(0);
      for (int i = 0; i < st.size(); ++i) CHECK(lt.le(z, i));
    }
    for (int i = 0; i < st.size(); ++i)
      for (int j = 0; j < st.size(); ++j)
        if (lt.le(i, j)) CHECK(st.entries[i].nu <= st.entries[j].nu);

    auto coll = F_collection(st);
    CHECK(coll.size() == 4);
    std::set<std::vector<std::uint64_t>> distinct(coll.begin(), coll.end());
    CHECK(distinct.size() == 4);

    for (const SectorEntry& e : st.entries) {
      if (plus) {
        // plus-side images are subspaces: closed under xor
        std::set<std::uint64_t> members(e.span_image.begin(), e.span_image.end());
        for (std::uint64_t a : e.span_image)
          for (std::uint64_t b : e.span_image) CHECK(members.count(a ^ b));
      } else {
        // minus-side images are complements of a hyperplane inside the
        // collapsed span
        int d = o5.records[e.record].span.dim();
        CHECK(e.span_image.size() == (1ull << d) / 2);
      }
    }
  }
}

TEST_CASE("degenerate smallest case") {
  Setup q3 = build_setup(GraphCase::CycleQuotient, 3);
  OmegaTable o3 = enumerate_omega(q3, enumerate_phi(q3), {2, 3});
  SectorContext ctx = default_context(q3, {2, 3});
  for (bool plus : {true, false}) {
    SectorTable st = build_sector_table(o3, plus, ctx.tau, ctx.J);
    CHECK(st.size() == 1);  // 2^0 classes per sign
    CHECK(F_collection(st).size() == 1);
  }
}
