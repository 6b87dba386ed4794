#include <gtest/gtest.h>

#include "orr/oracle.hpp"
#include "orr/rank.hpp"
#include "test_support.hpp"

using namespace orr;
using namespace orr::testing;

TEST(OracleEnumeration, Counts) {
  auto count = [](oracle::PartialOrientationStream s) {
    std::size_t c = 0;
    PartialOrientation o(p2());
    while (s.next(o)) ++c;
    return c;
  };
  EXPECT_EQ(count(oracle::enumerate_partial_orientations(p2())), 3u);
  EXPECT_EQ(count(oracle::enumerate_partial_orientations(c3())), 27u);
  EXPECT_EQ(count(oracle::enumerate_full_orientations(c3())), 8u);
  EXPECT_EQ(count(oracle::enumerate_partial_orientations(b3())), 27u);

  auto s = oracle::enumerate_partial_orientations(p2());
  PartialOrientation o(p2());
  ASSERT_TRUE(s.next(o));
  EXPECT_EQ(o.state(0), EdgeState::Unoriented);
  ASSERT_TRUE(s.next(o));
  EXPECT_EQ(o.state(0), EdgeState::TowardFirst);
  s.reset();
  ASSERT_TRUE(s.next(o));
  EXPECT_EQ(o.state(0), EdgeState::Unoriented);

  Caps tiny;
  tiny.partial_edges = 2;
  try {
    oracle::enumerate_partial_orientations(c3(), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(OracleClassKey, AgreesWithReducedForms) {
  for (const auto& g : {c3(), b3(), k4(), c4_chord(), lollipop()}) {
    oracle::ClassKeyer keyer(g);
    EXPECT_EQ(keyer.order(), spanning_tree_count(g));
    std::vector<Divisor> ds;
    for_each_divisor(g.num_vertices(), -2, 2, [&](const Divisor& d) {
      if (d.degree() == 1 || d.degree() == 0) ds.push_back(d);
    });
    for (std::size_t i = 0; i < ds.size(); i += 7)
      for (std::size_t j = 0; j < ds.size(); j += 5)
        ASSERT_EQ(keyer.equivalent(ds[i], ds[j]), linearly_equivalent(g, ds[i], ds[j]));
  }
}

TEST(OracleClassTable, Examples) {
  auto t = oracle::class_table_full(c3());
  EXPECT_EQ(t.classes.size(), 3u);
  EXPECT_EQ(t.orientations, 8u);
  std::size_t members = 0;
  for (const auto& c : t.classes) members += c.members.size();
  EXPECT_EQ(members, 8u);
  EXPECT_EQ(oracle::class_table_full(b3()).classes.size(), 3u);
  t = oracle::class_table_full(k4());
  EXPECT_EQ(t.classes.size(), 16u);
  EXPECT_EQ(t.orientations, 64u);
}

TEST(OracleClassTable, CountIsSpanningTreeCount) {
  for (const auto& g : oracle::enumerate_connected_multigraphs(5))
    ASSERT_EQ(static_cast<Int>(oracle::class_table_full(g).classes.size()), spanning_tree_count(g)) << format_graph(g);
}

TEST(OracleGraphs, ConnectedMultigraphCounts) {
  std::vector<std::size_t> by_edges(7, 0);
  for (const auto& g : oracle::enumerate_connected_multigraphs(6)) ++by_edges[g.num_edges()];
  EXPECT_EQ(by_edges, (std::vector<std::size_t>{0, 1, 2, 5, 12, 33, 103}));
}

TEST(OracleRank, Examples) {
  EXPECT_EQ(oracle::brute_rank(c3(), Divisor{0, 0, 0}), 0);
  EXPECT_EQ(oracle::brute_rank(c3(), Divisor{1, 1, 1}), 2);
  EXPECT_EQ(oracle::brute_rank(c3(), Divisor{1, -2, 0}), -1);
  EXPECT_EQ(oracle::brute_rank(b3(), Divisor{1, 1}), 1);
  EXPECT_EQ(oracle::brute_rank(k4(), canonical_divisor(k4())), 2);
}

TEST(OracleRank, MatchesProductionRank) {
  for (const auto& g : {c3(), b3(), c4(), lollipop(), k4(), c4_chord()}) {
    oracle::BruteRank brute(g);
    RankSolver solver(g);
    for_each_divisor(g.num_vertices(), -2, 3, [&](const Divisor& d) {
      ASSERT_EQ(brute.rank(d), solver.rank_value(d)) << format_graph(g) << format_divisor(g, d);
    });
  }
}

TEST(OracleDistance, Examples) {
  auto cyclic = orient_by_names(c3(), {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  EXPECT_EQ(oracle::path_reversal_distance(c3(), cyclic), 1);
  auto acyc = orient_by_names(c3(), {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  EXPECT_EQ(oracle::path_reversal_distance(c3(), acyc), 0);
  auto toward_v = orient_by_names(b3(), {{"u", "v"}, {"u", "v"}, {"u", "v"}});
  EXPECT_EQ(oracle::path_reversal_distance(b3(), toward_v), oracle::brute_rank(b3(), toward_v.divisor()) + 1);
}

TEST(OracleDistance, EqualsRankPlusOne) {
  for (const auto& g : {c3(), b3(), c4(), lollipop(), c4_chord()}) {
    oracle::BruteRank brute(g);
    std::vector<std::optional<oracle::PathReversalDistances>> tables(g.num_edges() + 1);
    for_each_orientation(g, false, [&](const PartialOrientation& o) {
      auto& t = tables[o.num_oriented()];
      if (!t) t.emplace(g, o.num_oriented());
      ASSERT_EQ(t->distance(o) - 1, brute.rank(o.divisor()));
    });
  }
}

TEST(OracleChi, MatchesProduction) {
  for (const auto& g : {c3(), b3(), k4(), c4_chord()}) {
    for_each_divisor(g.num_vertices(), -2, 2, [&](const Divisor& d) {
      auto a = oracle::chi_min(g, d);
      auto b = chi_global(g, d);
      ASSERT_EQ(a.chi, b.chi);
      ASSERT_EQ(a.chi_bar, b.chi_bar);
    });
  }
}

TEST(OraclePicard, ClassCount) {
  for (const auto& g : {c3(), b3(), k4(), c4_chord(), p2()}) {
    auto reps = oracle::picard_zero(g);
    EXPECT_EQ(static_cast<Int>(reps.size()), spanning_tree_count(g));
    for (const auto& z : reps) EXPECT_EQ(z.degree(), 0);
  }
}

TEST(OracleAcyclic, MatchesCycleSearch) {
  for (const auto& g : {c3(), b3(), k4(), lollipop()})
    for_each_orientation(g, false, [&](const PartialOrientation& o) { ASSERT_EQ(oracle::acyclic(o), is_acyclic(o)); });
}
