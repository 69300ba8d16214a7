#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "outerdraw/consistency.hpp"
#include "outerdraw/construct.hpp"
#include "outerdraw/io.hpp"
#include "outerdraw/oracle.hpp"
#include "outerdraw/uniform.hpp"

using namespace outerdraw;

namespace {

// The same drawing described from p_2: A and B trade places and the labels
// follow the ccw order at p_2.
Table2 swap_roles(const Table2& t) {
  const Permutation ccw_at_p2 = rotation_from_table2(t).value().reversed();
  return in_frame(reverse_table(t), ccw_at_p2);
}

std::vector<int> subset_of(int n, unsigned mask) {
  std::vector<int> s;
  for (int v = 1; v <= n; ++v)
    if (mask >> (v - 1) & 1) s.push_back(v);
  return s;
}

}  // namespace

TEST(Properties, RoleSwapPreservesConsistency) {
  for (int n = 2; n <= 5; ++n)
    for (const Table2& t : enumerate_drawings_k2(n)) EXPECT_TRUE(check_k2(swap_roles(t)).consistent);
}

TEST(Properties, RoleSwapMatchesRayDrawings) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto m = types_from_crossings(random_ray_drawing(2, 7, seed).graph);
    EXPECT_EQ(m.at({2, 1}), reverse_table(m.at({1, 2})));
  }
}

TEST(Properties, RestrictionKeepsConsistency) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const Table2 t = outerdraw::testing::random_drawing_table(7, rng);
    for (unsigned mask = 1; mask < (1u << 7); mask += 7) {
      const auto keep = subset_of(7, mask);
      EXPECT_TRUE(check_k2(t.restrict(keep)).consistent);
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RayDrawing d = random_ray_drawing(3, 6, seed);
    TableMap whole, part;
    const std::vector<int> keep{1, 3, 4, 6};
    for (const auto& [key, t] : types_from_crossings(d.graph))
      if (key.first < key.second) {
        whole.emplace(key, t);
        part.emplace(key, t.restrict(keep));
      }
    ASSERT_TRUE(check_general(3, whole).consistent);
    EXPECT_TRUE(check_general(3, part).consistent);
  }
}

TEST(Properties, RestrictionExhaustive) {
  // equivalently: a table extending an inconsistent one is inconsistent
  outerdraw::testing::for_each_table2(4, [](const Table2& t) {
    if (check_k2(t).consistent) {
      for (unsigned mask : {7u, 11u, 13u, 14u}) EXPECT_TRUE(check_k2(t.restrict(subset_of(4, mask))).consistent);
    }
  });
}

TEST(Properties, WitnessesAreInconsistentSubtables) {
  outerdraw::testing::for_each_table2(4, [](const Table2& t) {
    const Verdict v = check_k2(t);
    if (v.consistent) return;
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_FALSE(check_k2(t.restrict(v.witness->inner)).consistent);
  });
}

TEST(Properties, DocumentsRoundTrip) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    const Table2 t = outerdraw::testing::random_drawing_table(6, rng);
    const TypeTableDoc doc = parse_type_table(parse_json(type_table_document(t).dump()));
    EXPECT_EQ(doc.tables.at({1, 2}), t);
    const auto d = realize_k2(t);
    ASSERT_TRUE(d.ok());
    EXPECT_EQ(parse_wiring(parse_json(wiring_document(d.value()).dump())).events, d.value().events);
  }
  const RayDrawing ray = random_ray_drawing(4, 5, 3);
  EXPECT_EQ(parse_at_graph(parse_json(at_graph_document(ray.graph).dump())), ray.graph);
  EXPECT_EQ(parse_rotations(parse_json(rotations_document(ray.rotations).dump())), ray.rotations);
}

TEST(Properties, UniformDrawingsRealizeAsWiring) {
  for (const auto& tree : enumerate_uniform(2, 5)) {
    const Table2 t = uniform_to_tables(2, tree_to_table(tree)).at({1, 2});
    const auto d = realize_k2(t);
    ASSERT_TRUE(d.ok()) << tree.to_string();
    // every pair crosses exactly once
    EXPECT_EQ(d.value().swap_count(), t.pair_count());
  }
}
