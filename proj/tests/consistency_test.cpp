#include <gtest/gtest.h>

#include "helpers.hpp"
#include "outerdraw/consistency.hpp"
#include "outerdraw/oracle.hpp"

using namespace outerdraw;
using outerdraw::testing::table_from;
using enum PairType2;

namespace {

Permutation perm(std::vector<int> w) { return Permutation(std::move(w)); }

// A K_{3,4} table on the rotations (id_4, [4,2,1,3], [2,4,3,1]), with
// the free entry {2,3} = B_alpha.
K32Table infeasible_k3_table(K32Type alpha) {
  K32Table t(4, K32Type::W1);
  t.at(1, 2) = K32Type::W1;
  t.at(1, 3) = K32Type::W3;
  t.at(1, 4) = K32Type::W1;
  t.at(2, 3) = alpha;
  t.at(2, 4) = K32Type::W2;
  t.at(3, 4) = K32Type::W1;
  return t;
}

TableMap tables_of(const K32Table& t) {
  const auto p = projections(t);
  return tables_from_projections(p[0], p[1], p[2]);
}

}  // namespace

TEST(CheckK2, KnownTables) {
  // 12=A 13=N 14=B 23=N 24=N 34=B
  EXPECT_TRUE(check_k2(table_from(4, "ANBNNB")).consistent);
  // the quadruple rule without its guard would reject this one
  EXPECT_TRUE(check_k2(table_from(4, "NBABBA")).consistent);
  // five curves, N exactly on {12,15,34,35,45}, crossings all B or all A
  EXPECT_TRUE(check_k2(table_from(5, "NBBNBBBNNN")).consistent);
  EXPECT_TRUE(check_k2(table_from(5, "NAANAAANNN")).consistent);

  const Verdict bad = check_k2(table_from(3, "ANB"));
  EXPECT_FALSE(bad.consistent);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->rule, "triple");
  EXPECT_EQ(bad.witness->inner, (std::vector<int>{1, 2, 3}));
}

TEST(CheckK2, QuadrupleWitness) {
  const Verdict v = check_k2(table_from(4, "ABABBN"));
  ASSERT_FALSE(v.consistent);
  EXPECT_EQ(v.witness->rule, "quadruple");
  EXPECT_EQ(v.witness->inner, (std::vector<int>{1, 2, 3, 4}));
}

TEST(CheckK3, SmallCases) {
  const Table2 a = table_from(2, "A");
  EXPECT_FALSE(check_k3(a, a, a).consistent);
  for (K32Type t : kAllK32Types) {
    K32Table one(2, t);
    EXPECT_TRUE(check_k3(one).consistent) << to_string(t);
  }
}

TEST(CheckK3, FreeEntryFailsEveryChoice) {
  const std::vector<int> first{1, 2, 3}, last{2, 3, 4};
  for (K32Type alpha : {K32Type::B1, K32Type::B2, K32Type::B3}) {
    const K32Table t = infeasible_k3_table(alpha);
    EXPECT_FALSE(check_k3(t).consistent) << to_string(alpha);
    EXPECT_EQ(check_k3(t.restrict(first)).consistent, alpha == K32Type::B2) << to_string(alpha);
    EXPECT_EQ(check_k3(t.restrict(last)).consistent, alpha == K32Type::B3) << to_string(alpha);
  }
}

TEST(CheckK3, InfeasibleTableHasItsRotations) {
  const auto rs = rotations_from_tables(3, tables_of(infeasible_k3_table(K32Type::B2)));
  ASSERT_TRUE(rs.ok());
  EXPECT_EQ(rs.value().perms, (std::vector<Permutation>{Permutation::identity(4), perm({4, 2, 1, 3}), perm({2, 4, 3, 1})}));
}

TEST(CheckGeneral, DegeneratesToCheckK2) {
  for (int n = 2; n <= 4; ++n)
    outerdraw::testing::for_each_table2(n, [](const Table2& t) {
      EXPECT_EQ(check_general(2, {{{1, 2}, t}}).consistent, check_k2(t).consistent);
    });
}

TEST(CheckGeneral, InputErrors) {
  EXPECT_THROW(check_general(3, {{{1, 2}, table_from(2, "A")}}), InputError);
  TableMap mismatch{{{1, 2}, table_from(2, "A")}, {{2, 1}, table_from(2, "A")}};
  EXPECT_THROW(check_general(2, mismatch), InputError);
  TableMap sizes{{{1, 2}, table_from(2, "A")}, {{1, 3}, table_from(3, "AAA")}, {{2, 3}, table_from(2, "A")}};
  EXPECT_THROW(check_general(3, sizes), InputError);
}

TEST(CheckGeneral, ProjectionWitness) {
  const Table2 a = table_from(2, "A");
  const Verdict v = check_general(3, {{{1, 2}, a}, {{1, 3}, a}, {{2, 3}, a}});
  ASSERT_FALSE(v.consistent);
  EXPECT_EQ(v.witness->rule, "k32_projection");
  EXPECT_EQ(v.witness->outer, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(v.witness->inner, (std::vector<int>{1, 2}));
}

TEST(CheckGeneral, AgreesWithRayDrawings) {
  for (int k = 2; k <= 5; ++k)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const RayDrawing d = random_ray_drawing(k, 6, 1000 + seed);
      TableMap tables;
      for (const auto& [key, t] : types_from_crossings(d.graph))
        if (key.first < key.second) tables.emplace(key, t);
      EXPECT_TRUE(check_general(k, tables).consistent) << "k=" << k << " seed=" << seed;
      const auto rs = rotations_from_tables(k, tables);
      ASSERT_TRUE(rs.ok());
      EXPECT_EQ(rs.value(), d.rotations);
    }
}

TEST(Realize, AtGraphExamples) {
  EXPECT_TRUE(realize_atgraph(ATGraph{2, 2, {}}).consistent);
  // (A,N,B): 12 = A via (p1,1)x(p2,2), 23 = B via (p2,2)x(p1,3)
  ATGraph bad{2, 3, {Crossing::make({1, 1}, {2, 2}), Crossing::make({2, 2}, {1, 3})}};
  EXPECT_FALSE(realize_atgraph(bad).consistent);
  ATGraph twice{2, 2, {Crossing::make({1, 1}, {2, 2}), Crossing::make({2, 1}, {1, 2})}};
  const Verdict v = realize_atgraph(twice);
  EXPECT_FALSE(v.consistent);
  EXPECT_EQ(v.witness->rule, "double_crossing");
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    EXPECT_TRUE(realize_atgraph(random_ray_drawing(3, 4, seed).graph).consistent);
}

TEST(Search, ThreeStarSystemIsInfeasible) {
  EXPECT_FALSE(search_rotation_k3(Permutation::identity(4), perm({4, 2, 1, 3}), perm({2, 4, 3, 1})).has_value());
  const RotationSystem rs{{Permutation::identity(4), perm({4, 2, 1, 3}), perm({2, 4, 3, 1})}};
  const auto core = minimal_infeasible_subset(rs);
  EXPECT_EQ(core, (std::vector<int>{1, 2, 3, 4}));
}

TEST(Search, FourOuterVerticesInfeasible) {
  const RotationSystem rs{{perm({1, 2}), perm({2, 1}), perm({1, 2}), perm({2, 1})}};
  EXPECT_FALSE(search_rotation(rs).has_value());
  EXPECT_EQ(minimal_infeasible_subset(rs), (std::vector<int>{1, 2}));
}

TEST(Search, FoundTablesAreConsistent) {
  const Permutation p1 = perm({1, 6, 5, 2, 3, 4}), p2 = perm({3, 2, 1, 4, 5, 6}), p3 = perm({5, 4, 3, 6, 1, 2});
  const auto t = search_rotation_k3(p1, p2, p3);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(check_k3(*t).consistent);
  const auto rs = rotations_from_tables(3, tables_of(*t));
  ASSERT_TRUE(rs.ok());
  // labels are relative to p1, so compare after relabelling by p1
  const Permutation inv = p1.inverse();
  EXPECT_EQ(rs.value().perms[1], inv.compose(p2));
  EXPECT_EQ(rs.value().perms[2], inv.compose(p3));

  const auto uniform = search_rotation_k3(Permutation::identity(5), Permutation::identity(5), Permutation::identity(5));
  ASSERT_TRUE(uniform.has_value());
  EXPECT_TRUE(check_k3(*uniform).consistent);
}

TEST(Search, RayDrawingRotationsAreFeasible) {
  for (int k = 2; k <= 4; ++k)
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const RayDrawing d = random_ray_drawing(k, 6, 77 + seed);
      const auto found = search_rotation(d.rotations);
      ASSERT_TRUE(found.has_value()) << "k=" << k << " seed=" << seed;
      EXPECT_TRUE(check_general(k, *found).consistent);
    }
}
