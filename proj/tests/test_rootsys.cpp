#include "sphorb/rootsys.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace sphorb;

namespace {

RootSystemPtr rs(const char *t) { return RootSystem::get(t); }

} // namespace

TEST(RootSystemType, ParseAndName) {
  EXPECT_EQ(RootSystemType::parse("B3").name(), "B3");
  EXPECT_EQ(RootSystemType::parse("e8").name(), "E8");
  EXPECT_EQ(RootSystemType::parse("A1").rank, 1);
  for (const char *bad : {"B1", "C1", "D2", "E5", "E9", "F3", "G3", "A0", "A9", "H3", "", "B", "Bx"})
    EXPECT_THROW(RootSystemType::parse(bad), std::invalid_argument) << bad;
}

TEST(RootSystemType, AllTypesUpToEight) {
  const auto ts = all_types();
  EXPECT_EQ(ts.size(), 8u + 7u + 7u + 6u + 3u + 1u + 1u);
}

TEST(RootSystem, PositiveRootCountsMatchClassicalAndOrbit) {
  for (const auto &t : all_types()) {
    const auto r = RootSystem::get(t);
    EXPECT_EQ(r->num_positive_roots(), RootSystem::classical_positive_count(t)) << t.name();
  }
  // independent orbit count on small groups
  for (const char *t : {"A1", "A3", "B3", "C3", "D4", "G2", "F4"}) {
    const auto r = rs(t);
    const oracle::Group g(r->cartan());
    EXPECT_EQ(static_cast<int>(oracle::roots(g).size()), 2 * r->num_positive_roots()) << t;
  }
}

TEST(RootSystem, BuildExamples) {
  EXPECT_EQ(rs("A1")->num_positive_roots(), 1);
  EXPECT_EQ(rs("A1")->positive_roots().front(), (LatticeVector{1}));
  EXPECT_EQ(rs("G2")->num_positive_roots(), 6);
  EXPECT_EQ(rs("G2")->highest_root(), (LatticeVector{3, 2}));
  EXPECT_EQ(rs("B3")->num_positive_roots(), 9);
}

TEST(RootSystem, BourbakiCartanEntries) {
  auto entry = [](const char *t, int i, int j) { return rs(t)->cartan()(i - 1, j - 1); };
  EXPECT_EQ(entry("G2", 1, 2), -1);
  EXPECT_EQ(entry("G2", 2, 1), -3);
  EXPECT_EQ(entry("B3", 2, 3), -2);
  EXPECT_EQ(entry("B3", 3, 2), -1);
  EXPECT_EQ(entry("C3", 3, 2), -2);
  EXPECT_EQ(entry("C3", 2, 3), -1);
  EXPECT_EQ(entry("F4", 2, 3), -2);
  EXPECT_EQ(entry("F4", 3, 2), -1);
  EXPECT_EQ(entry("D5", 3, 4), -1);
  EXPECT_EQ(entry("D5", 3, 5), -1);
  EXPECT_EQ(entry("D5", 4, 5), 0);
  EXPECT_EQ(entry("E6", 2, 4), -1);
  EXPECT_EQ(entry("E6", 1, 3), -1);
  EXPECT_EQ(entry("E6", 2, 3), 0);
  EXPECT_EQ(entry("E6", 1, 2), 0);
}

TEST(RootSystem, HighestRootsMatchPlanches) {
  const std::vector<std::pair<const char *, LatticeVector>> table = {
      {"A1", {1}},
      {"A4", {1, 1, 1, 1}},
      {"B4", {1, 2, 2, 2}},
      {"C3", {2, 2, 1}},
      {"C4", {2, 2, 2, 1}},
      {"D4", {1, 2, 1, 1}},
      {"D6", {1, 2, 2, 2, 1, 1}},
      {"E6", {1, 2, 2, 3, 2, 1}},
      {"E7", {2, 2, 3, 4, 3, 2, 1}},
      {"E8", {2, 3, 4, 6, 5, 4, 3, 2}},
      {"F4", {2, 3, 4, 2}},
      {"G2", {3, 2}},
  };
  for (const auto &[t, h] : table) {
    const auto r = rs(t);
    EXPECT_EQ(r->highest_root(), h) << t;
    for (const auto &b : r->positive_roots())
      for (int k = 0; k < r->rank(); ++k) EXPECT_LE(b[k], h[k]) << t << " " << b;
  }
}

TEST(RootSystem, CartanPairingExamples) {
  for (const auto &t : all_types()) {
    const auto r = RootSystem::get(t);
    for (int i = 1; i <= r->rank(); ++i) EXPECT_EQ(r->cartan_pairing(r->simple_root(i), i), 2);
  }
  EXPECT_EQ(rs("A2")->cartan_pairing(LatticeVector{1, 0}, 2), -1);
  EXPECT_EQ(rs("G2")->cartan_pairing(LatticeVector{0, 1}, 1), -3);
  EXPECT_THROW(rs("A2")->cartan_pairing(LatticeVector{1, 0}, 3), std::out_of_range);
  EXPECT_THROW(rs("A2")->cartan_pairing(LatticeVector{1, 0, 0}, 1), std::invalid_argument);
}

TEST(RootSystem, IsRootAndRootSum) {
  const auto a2 = rs("A2");
  EXPECT_EQ(a2->root_sum(LatticeVector{1, 0}, LatticeVector{0, 1}), (LatticeVector{1, 1}));
  EXPECT_FALSE(a2->root_sum(LatticeVector{1, 0}, LatticeVector{1, 0}));
  EXPECT_TRUE(rs("G2")->is_root(LatticeVector{3, 2}));
  EXPECT_FALSE(rs("G2")->is_root(LatticeVector{5, 5}));
  EXPECT_FALSE(a2->is_root(LatticeVector{0, 0}));
  EXPECT_FALSE(a2->is_root(LatticeVector{1}));
}

TEST(RootSystem, TableProperties) {
  for (const auto &t : all_types()) {
    const auto r = RootSystem::get(t);
    const auto &pos = r->positive_roots();
    for (int i = 1; i <= r->rank(); ++i) EXPECT_TRUE(r->is_positive_root(r->simple_root(i)));
    for (std::size_t k = 0; k < pos.size(); ++k) {
      const auto &b = pos[k];
      EXPECT_TRUE(r->is_root(-b));
      EXPECT_TRUE(b.is_nonnegative() && !b.is_zero());
      if (k > 0) {
        EXPECT_TRUE(pos[k - 1].height() < b.height() || (pos[k - 1].height() == b.height() && pos[k - 1] < b));
      }
      if (b.height() > 1) {
        bool found = false;
        for (int i = 1; i <= r->rank() && !found; ++i)
          found = r->cartan_pairing(b, i) > 0 && r->is_positive_root(b - r->simple_root(i));
        EXPECT_TRUE(found) << t.name() << " " << b;
      }
    }
    // closure: a + b a root implies it is listed positive
    for (const auto &a : pos)
      for (const auto &b : pos)
        if (auto s = r->root_sum(a, b)) {
          EXPECT_TRUE(r->positive_index(*s).has_value());
        }
  }
}

TEST(RootSystem, RootLengths) {
  for (const char *t : {"A5", "D5", "E7"})
    for (const auto &b : rs(t)->positive_roots()) EXPECT_EQ(rs(t)->length_of(b), RootLength::Long);
  auto count_short = [](const char *t) {
    int k = 0;
    for (const auto &b : rs(t)->positive_roots()) k += rs(t)->length_of(b) == RootLength::Short;
    return k;
  };
  EXPECT_EQ(count_short("B3"), 3);
  EXPECT_EQ(count_short("C3"), 6);
  EXPECT_EQ(count_short("G2"), 3);
  EXPECT_EQ(count_short("F4"), 12);
  EXPECT_EQ(rs("G2")->length_of(LatticeVector{1, 0}), RootLength::Short);
  EXPECT_EQ(rs("B3")->length_of(LatticeVector{0, 0, 1}), RootLength::Short);
  EXPECT_EQ(rs("C3")->length_of(LatticeVector{0, 0, 1}), RootLength::Long);
  EXPECT_DOUBLE_EQ(rs("G2")->inner_product(LatticeVector{0, 1}, LatticeVector{0, 1}), 2.0);
  EXPECT_DOUBLE_EQ(rs("B2")->inner_product(LatticeVector{0, 1}, LatticeVector{0, 1}), 1.0);
}

TEST(RootSystem, DepthExamples) {
  EXPECT_EQ(rs("A2")->depth(LatticeVector{1, 1}), 2);
  EXPECT_EQ(rs("A3")->depth(LatticeVector{1, 1, 1}), 3);
  for (const auto &t : all_types()) {
    const auto r = RootSystem::get(t);
    for (int i = 1; i <= r->rank(); ++i) EXPECT_EQ(r->depth(r->simple_root(i)), 1);
  }
  EXPECT_THROW(rs("A2")->depth(LatticeVector{-1, 0}), std::invalid_argument);
  EXPECT_THROW(rs("A2")->depth(LatticeVector{2, 0}), std::invalid_argument);
}

TEST(RootSystem, DepthAgreesWithGroupScan) {
  for (const char *t : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto r = rs(t);
    const oracle::Group g(r->cartan());
    for (const auto &b : r->positive_roots()) {
      EXPECT_EQ(r->depth(b), oracle::depth(g, b)) << t << " " << b;
      const auto [word, simple] = r->descent_to_simple(b);
      EXPECT_EQ(static_cast<int>(word.size()), r->depth(b) - 1) << t << " " << b;
      LatticeVector v = b;
      for (int i : word) v = r->reflect(i, v);
      EXPECT_EQ(v, r->simple_root(simple));
    }
  }
}

TEST(RootSystem, SubsystemPositiveRoots) {
  EXPECT_TRUE(rs("B3")->subsystem_positive_roots(SimpleSet{}).empty());
  EXPECT_EQ(rs("B3")->subsystem_positive_roots(SimpleSet{2, 3}).size(), 4u);
  EXPECT_EQ(rs("E8")->subsystem_positive_roots(SimpleSet::full(8)).size(), 120u);
  EXPECT_EQ(rs("E8")->subsystem_positive_roots(SimpleSet::interval(1, 7)).size(), 63u);
  EXPECT_EQ(rs("E8")->subsystem_positive_roots(SimpleSet::interval(2, 5)).size(), 12u); // D4
  EXPECT_EQ(rs("D6")->subsystem_positive_roots(SimpleSet{1, 3, 5, 6}).size(), 4u);     // 4 A1
  EXPECT_EQ(rs("F4")->subsystem_positive_roots(SimpleSet{2, 3}).size(), 4u);           // B2
  EXPECT_EQ(rs("F4")->subsystem_positive_roots(SimpleSet{1, 2, 3}).size(), 9u);        // B3
  EXPECT_EQ(rs("F4")->subsystem_positive_roots(SimpleSet{2, 3, 4}).size(), 9u);        // C3
}

TEST(RootSystem, Components) {
  const auto c = rs("D6")->components(SimpleSet{1, 3, 4, 5, 6});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], SimpleSet{1});
  EXPECT_EQ(c[1], (SimpleSet{3, 4, 5, 6}));
  EXPECT_EQ(rs("E6")->components(SimpleSet{2, 3, 4}).size(), 1u);
}

TEST(RootSystem, CacheReturnsSameInstance) {
  EXPECT_EQ(RootSystem::get("F4").get(), RootSystem::get(RootSystemType::make(Family::F, 4)).get());
  EXPECT_NE(RootSystem::build(RootSystemType::parse("F4")).get(), RootSystem::get("F4").get());
}
