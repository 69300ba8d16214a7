#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "outerdraw/consistency.hpp"
#include "outerdraw/construct.hpp"
#include "outerdraw/oracle.hpp"

using namespace outerdraw;
using outerdraw::testing::table_from;

namespace {

WiringDiagram diagram(int n, std::vector<WiringEvent> ev) { return WiringDiagram{n, std::move(ev)}; }

}  // namespace

TEST(Wiring, ValidateCatchesEveryInvariant) {
  using E = WiringEvent;
  EXPECT_NO_THROW(diagram(2, {E::vertex(1), E::vertex(2)}).validate());
  EXPECT_THROW(diagram(2, {E::vertex(1)}).validate(), InputError);                       // missing vertex
  EXPECT_THROW(diagram(2, {E::vertex(1), E::vertex(1), E::vertex(2)}).validate(), InputError);
  EXPECT_THROW(diagram(2, {E::swap(0), E::vertex(1), E::vertex(2)}).validate(), InputError);  // red-red
  EXPECT_THROW(diagram(2, {E::vertex(1), E::vertex(2), E::swap(0)}).validate(), InputError);  // blue-blue
  EXPECT_THROW(diagram(2, {E::vertex(1), E::swap(1), E::vertex(2)}).validate(), InputError);  // out of range
  EXPECT_THROW(diagram(3, {E::vertex(1), E::swap(0), E::vertex(3), E::swap(1), E::swap(0), E::vertex(2)}).validate(),
               InputError);  // 1 and 2 meet twice
}

TEST(Wiring, ExtractTable) {
  using E = WiringEvent;
  EXPECT_EQ(extract_table(diagram(2, {E::vertex(1), E::vertex(2)})), table_from(2, "N"));
  // red(1) x blue(2)
  EXPECT_EQ(extract_table(diagram(2, {E::vertex(2), E::swap(0), E::vertex(1)})), table_from(2, "A"));
  // blue(1) x red(2)
  EXPECT_EQ(extract_table(diagram(2, {E::vertex(1), E::swap(0), E::vertex(2)})), table_from(2, "B"));
  const WiringDiagram d = diagram(2, {E::vertex(1), E::swap(0), E::vertex(2)});
  EXPECT_EQ(d.final_order(), Permutation({2, 1}));
  EXPECT_EQ(d.swap_count(), 1u);
}

TEST(TArrangement, CrossesExactlyTheNonInversions) {
  EXPECT_EQ(build_T_arrangement(Permutation::identity(5)).swaps.size(), 10u);
  EXPECT_TRUE(build_T_arrangement(Permutation::reversal(5)).swaps.empty());
  const auto T = build_T_arrangement(Permutation({3, 4, 1, 5, 2}));
  auto pairs = T.crossings();
  std::sort(pairs.begin(), pairs.end());
  EXPECT_EQ(pairs, (std::vector<std::pair<int, int>>{{1, 2}, {1, 5}, {3, 4}, {3, 5}, {4, 5}}));
}

TEST(LocalSequences, SmallCases) {
  const Table2 b = table_from(2, "B");
  const auto ls = local_sequences(b, build_T_arrangement(rotation_from_table2(b).value()));
  EXPECT_EQ(ls.alpha, (std::vector<std::vector<int>>{{2}, {1}}));
  // type B: blue part of 1, red part of 2
  EXPECT_EQ(ls.red, (std::vector<int>{0, 1}));
  EXPECT_EQ(ls.blue, (std::vector<int>{1, 0}));

  const Table2 n = table_from(2, "N");
  const auto lsn = local_sequences(n, build_T_arrangement(rotation_from_table2(n).value()));
  EXPECT_EQ(lsn.red, (std::vector<int>{0, 0}));
  EXPECT_EQ(lsn.blue, (std::vector<int>{0, 0}));
  EXPECT_EQ(lsn.alpha, (std::vector<std::vector<int>>{{2}, {1}}));
}

TEST(LocalSequences, AllBOnThreeCurves) {
  const Table2 t = table_from(3, "BBB");
  const auto ls = local_sequences(t, build_T_arrangement(rotation_from_table2(t).value()));
  // curve 2 first meets 1 on its red part, then 3 on its blue part
  EXPECT_EQ(ls.alpha[1], (std::vector<int>{1, 3}));
  EXPECT_EQ(ls.red[1], 1);
  EXPECT_EQ(ls.blue[1], 1);
  // and this is what the oracle's all-B drawing does
  const auto d = realize_k2(t);
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(extract_table(d.value()), t);
}

TEST(LocalSequences, SatisfyTheInversionCondition) {
  for (int n = 2; n <= 5; ++n)
    for (const Table2& t : enumerate_drawings_k2(n)) {
      const auto ls = local_sequences(t, build_T_arrangement(rotation_from_table2(t).value()));
      EXPECT_TRUE(local_sequences_valid(ls)) << outerdraw::testing::letters_of(t);
    }
}

TEST(Realize, QuadrupleViolationRefused) {
  // violates the quadruple rule, so no drawing exists
  const Table2 bad = table_from(4, "ABABBN");
  ASSERT_FALSE(check_k2(bad).consistent);
  EXPECT_FALSE(realize_k2(bad).ok());
}

TEST(Realize, RoundTripExhaustive) {
  for (int n = 1; n <= 5; ++n) {
    int consistent = 0;
    outerdraw::testing::for_each_table2(n, [&](const Table2& t) {
      const auto d = realize_k2(t);
      EXPECT_EQ(d.ok(), check_k2(t).consistent);
      if (!d.ok()) return;
      ++consistent;
      EXPECT_NO_THROW(d.value().validate());
      EXPECT_EQ(extract_table(d.value()), t);
      EXPECT_EQ(d.value().final_order(), rotation_from_table2(t).value());
    });
    EXPECT_GT(consistent, 0);
  }
}

TEST(Realize, RoundTripRandom) {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 5 + rep % 6;
    const Table2 t = outerdraw::testing::random_drawing_table(n, rng);
    const auto d = realize_k2(t);
    ASSERT_TRUE(d.ok()) << outerdraw::testing::letters_of(t);
    EXPECT_EQ(extract_table(d.value()), t);
  }
}

TEST(Realize, KnownTables) {
  const auto five = realize_k2(table_from(5, "NBBNBBBNNN"));
  ASSERT_TRUE(five.ok());
  EXPECT_EQ(five.value().swap_count(), 5u);
  const auto none = realize_k2(Table2(4, PairType2::N));
  ASSERT_TRUE(none.ok());
  EXPECT_EQ(none.value().swap_count(), 0u);
  const auto bad = realize_k2(table_from(3, "ANB"));
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.witness().rule, "triple");
}
