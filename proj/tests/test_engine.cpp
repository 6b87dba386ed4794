#include <gtest/gtest.h>

#include <set>

#include "orr/engine.hpp"
#include "test_support.hpp"

using namespace orr;
using namespace orr::testing;

namespace {

PartialOrientation lollipop_cycle() {
  return orient_by_names(lollipop(), {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "b"}});
}

// Orientations reachable from o by edge pivots alone.
std::vector<PartialOrientation> pivot_closure(const PartialOrientation& o) {
  std::set<std::vector<EdgeState>> seen{{o.states().begin(), o.states().end()}};
  std::vector<PartialOrientation> out{o};
  const Multigraph& g = o.graph();
  for (std::size_t i = 0; i < out.size(); ++i) {
    PartialOrientation cur = out[i];
    for (EdgeId a = 0; a < g.num_edges(); ++a)
      for (EdgeId b = 0; b < g.num_edges(); ++b) {
        if (!cur.is_oriented(a) || cur.is_oriented(b) || !g.edge(b).touches(cur.head(a))) continue;
        auto next = apply_move(cur, EdgePivot{a, b, cur.head(a)});
        if (seen.insert({next.states().begin(), next.states().end()}).second) out.push_back(next);
      }
  }
  return out;
}

std::vector<Multigraph> small_graphs() {
  return {p2(), c3(), c4(), b2(), b3(), lollipop(), c4_chord(), load_graph("a b\na b\nb c\nc a\n")};
}

}  // namespace

TEST(OrientedDhar, Examples) {
  auto acyclic = orient_by_names(c3(), {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  auto r = oriented_dhar(acyclic);
  EXPECT_EQ(r.outcome, Outcome::Acyclic);
  EXPECT_TRUE(r.certificate.moves.empty());

  auto cyclic = orient_by_names(c3(), {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  r = oriented_dhar(cyclic);
  EXPECT_EQ(r.outcome, Outcome::CycleLocked);
  EXPECT_TRUE(r.locked.empty());

  auto lol = lollipop_cycle();
  r = oriented_dhar(lol);
  EXPECT_EQ(r.outcome, Outcome::CycleLocked);
  EXPECT_EQ(r.locked, VertexSet::single(4, lol.graph().vertex("a")));
}

TEST(OrientedDhar, CycleLockedMeansNoAcyclicPivotRelative) {
  for (const auto& g : small_graphs()) {
    for_each_orientation(g, false, [&](const PartialOrientation& o) {
      auto r = oriented_dhar(o);
      ASSERT_EQ(replay(r.certificate, o), r.orientation);
      ASSERT_EQ(r.orientation.divisor(), o.divisor());
      for (const Move& m : r.certificate.moves) ASSERT_TRUE(std::holds_alternative<EdgePivot>(m));
      bool any_acyclic = false;
      for (const auto& p : pivot_closure(o)) any_acyclic = any_acyclic || is_acyclic(p);
      ASSERT_EQ(r.outcome == Outcome::Acyclic, any_acyclic) << format_graph(g) << format_orientation(o);
      if (r.outcome == Outcome::CycleLocked) {
        ASSERT_FALSE(is_acyclic(r.orientation));
      }
    });
  }
}

TEST(Unfurl, Examples) {
  auto lol = lollipop_cycle();
  auto r = unfurl(lol);
  EXPECT_EQ(r.outcome, Outcome::Sourceless);
  EXPECT_EQ(r.orientation.divisor(), (Divisor{0, 0, 0, 0}));
  EXPECT_EQ(r.orientation.head(0), lol.graph().vertex("a"));

  auto cyclic = orient_by_names(c3(), {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  r = unfurl(cyclic);
  EXPECT_EQ(r.outcome, Outcome::Sourceless);
  EXPECT_TRUE(r.certificate.moves.empty());
}

TEST(Unfurl, DichotomyMatchesRankSign) {
  for (const auto& g : small_graphs()) {
    RankSolver solver(g);
    for_each_orientation(g, false, [&](const PartialOrientation& o) {
      auto r = unfurl(o);
      ASSERT_EQ(replay(r.certificate, o), r.orientation);
      auto c = classify(r.orientation);
      ASSERT_TRUE(r.outcome == Outcome::Acyclic ? c.acyclic : c.sourceless);
      ASSERT_EQ(r.outcome == Outcome::Acyclic, solver.rank_value(o.divisor()) == -1);
    });
  }
}

TEST(Unfurl, Budget) {
  RunLimits limits;
  limits.max_rounds = 0;
  std::stop_source src;
  src.request_stop();
  limits.stop = src.get_token();
  try {
    unfurl(lollipop_cycle(), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Cancelled);
  }
}

TEST(ModifiedUnfurl, Examples) {
  auto g = c3();
  auto o = orient_by_names(g, {{"b", "c"}});
  auto s = VertexSet::single(3, g.vertex("a"));
  auto r = modified_unfurl(o, s);
  EXPECT_EQ(replay(r.certificate, o), r.orientation);
  EXPECT_TRUE(equivalent(o, r.orientation));

  // Immediate pivot: a is a source; b -> c with unoriented {a, c}... the
  // cut ({a}, {b, c}) is reversed once, pointing an edge into a.
  auto full = orient_by_names(g, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  r = modified_unfurl(full, s);
  EXPECT_EQ(r.outcome, Outcome::EdgeIntoS);
  EXPECT_EQ(r.certificate.moves.size(), 1u);

  EXPECT_THROW(modified_unfurl(full, VertexSet::single(3, g.vertex("b"))), Error);
  EXPECT_THROW(modified_unfurl(full, VertexSet(3)), Error);
}

TEST(ModifiedUnfurl, GuaranteesOnSmallGraphs) {
  for (const auto& g : small_graphs()) {
    const std::size_t n = g.num_vertices();
    for_each_orientation(g, false, [&](const PartialOrientation& o) {
      VertexSet src = o.sources();
      for (VertexId v : src.members()) {
        auto s = VertexSet::single(n, v);
        auto r = modified_unfurl(o, s);
        ASSERT_EQ(replay(r.certificate, o), r.orientation);
        ASSERT_TRUE(equivalent(o, r.orientation));
        if (r.outcome == Outcome::EdgeIntoS) {
          ASSERT_TRUE(r.orientation.points_to(*r.edge_into_s, v));
        } else {
          ASSERT_EQ(r.outcome, Outcome::Acyclic);
          ASSERT_TRUE(is_acyclic(r.orientation));
          // No equivalent partial orientation has an edge into v.
          for_each_orientation(g, false, [&](const PartialOrientation& p) {
            if (p.indegree(v) > 0) {
              ASSERT_FALSE(equivalent(p, o)) << format_orientation(p);
            }
          });
        }
      }
    });
  }
}

TEST(Construct, Examples) {
  auto g = c3();
  auto c = construct_orientation(g, Divisor{0, 0, 0});
  EXPECT_TRUE(c.realized);
  EXPECT_TRUE(linearly_equivalent(g, c.orientation.divisor(), Divisor{0, 0, 0}));
  EXPECT_EQ(replay(c.certificate, PartialOrientation(g)), c.orientation);

  auto b = b3();
  c = construct_orientation(b, Divisor{-1, -1});
  EXPECT_TRUE(c.realized);
  EXPECT_EQ(c.orientation.divisor(), (Divisor{-1, -1}));

  RankSolver solver(g);
  c = construct_orientation(g, Divisor{-2, 0, 1});
  EXPECT_EQ(c.realized, solver.rank_value(Divisor{-1, 1, 2}) >= 0);

  try {
    construct_orientation(g, Divisor{1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooHigh);
  }
}

TEST(Construct, RealizedIffRankOfShiftNonnegative) {
  for (const auto& g : small_graphs()) {
    const std::size_t n = g.num_vertices();
    RankSolver solver(g);
    const Int top = genus(g) - 1;
    std::vector<Int> vals(n, -3);
    for (;;) {
      Divisor d(vals);
      if (d.degree() <= top) {
        auto c = construct_orientation(g, d);
        ASSERT_EQ(replay(c.certificate, PartialOrientation(g)), c.orientation);
        ASSERT_EQ(c.realized, solver.rank_value(d + ones(g)) >= 0) << format_graph(g) << format_divisor(g, d);
        if (!c.realized) {
          ASSERT_TRUE(is_acyclic(c.orientation));
          ASSERT_TRUE(c.orientation.divisor().dominates(c.obstruction));
          ASSERT_NE(c.orientation.divisor(), c.obstruction);
        }
      }
      std::size_t i = 0;
      while (i < n && ++vals[i] > 2) vals[i++] = -3;
      if (i == n) break;
    }
  }
}

TEST(QConnected, Examples) {
  auto cyclic = orient_by_names(c3(), {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto r = to_q_connected(cyclic, 0);
  EXPECT_TRUE(r.certificate.moves.empty());
  auto anti = orient_by_names(c3(), {{"a", "c"}, {"c", "b"}, {"b", "a"}});
  EXPECT_TRUE(to_q_connected(anti, 0).certificate.moves.empty());

  auto lg = lollipop();
  auto o = orient_by_names(lg, {{"b", "a"}, {"b", "c"}, {"c", "d"}, {"d", "b"}});
  r = to_q_connected(o, lg.vertex("a"));
  ASSERT_EQ(r.certificate.moves.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<CutReversal>(r.certificate.moves[0]));
  EXPECT_EQ(r.orientation.head(0), lg.vertex("b"));
  EXPECT_TRUE(classify(r.orientation, lg.vertex("a")).q_connected);

  auto acyc = orient_by_names(c3(), {{"a", "b"}, {"b", "c"}});
  EXPECT_THROW(to_q_connected(acyc, 1), Error);
}

TEST(QConnected, RealizabilityMatchesRank) {
  for (const auto& g : small_graphs()) {
    const std::size_t n = g.num_vertices();
    RankSolver solver(g);
    std::vector<Int> vals(n, -3);
    for (;;) {
      Divisor d(vals);
      if (d.degree() <= genus(g) - 1) {
        for (VertexId q = 0; q < n; ++q) {
          auto r = q_connected_orientation(g, d, q);
          ASSERT_EQ(r.has_value(), solver.rank_value(d + Divisor::unit(n, q)) >= 0);
          if (r) {
            ASSERT_TRUE(classify(r->orientation, q).q_connected);
            ASSERT_TRUE(linearly_equivalent(g, r->orientation.divisor(), d));
            ASSERT_EQ(replay(r->certificate, PartialOrientation(g)), r->orientation);
          }
        }
      }
      std::size_t i = 0;
      while (i < n && ++vals[i] > 2) vals[i++] = -3;
      if (i == n) break;
    }
  }
}

TEST(Equivalent, Examples) {
  auto cyclic = orient_by_names(c3(), {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto anti = orient_by_names(c3(), {{"a", "c"}, {"c", "b"}, {"b", "a"}});
  auto acyc = orient_by_names(c3(), {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  EXPECT_TRUE(equivalent(cyclic, anti));
  EXPECT_FALSE(equivalent(cyclic, acyc));
  EXPECT_TRUE(equivalent(acyc, acyc));
  try {
    equivalent(cyclic, PartialOrientation(c4()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GraphMismatch);
  }
}

TEST(PathReversalRank, Examples) {
  auto cyclic = orient_by_names(c3(), {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto r = rank_via_path_reversals(cyclic);
  EXPECT_EQ(r.rank, 0);
  EXPECT_EQ(r.path_reversals, 1u);
  EXPECT_TRUE(is_acyclic(r.orientation));
  EXPECT_EQ(replay(r.certificate, cyclic), r.orientation);

  auto acyc = orient_by_names(c3(), {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  r = rank_via_path_reversals(acyc);
  EXPECT_EQ(r.rank, -1);
  EXPECT_EQ(r.path_reversals, 0u);

  auto b = b3();
  auto o = orient_by_names(b, {{"u", "v"}, {"u", "v"}, {"v", "u"}});
  EXPECT_EQ(o.divisor(), (Divisor{0, 1}));
  r = rank_via_path_reversals(o);
  EXPECT_EQ(r.rank, rank(b, o.divisor()).rank);
  EXPECT_EQ(r.path_reversals, static_cast<std::size_t>(r.rank + 1));
}

TEST(PathReversalRank, AllSmallOrientations) {
  for (const auto& g : small_graphs()) {
    RankSolver solver(g);
    for_each_orientation(g, false, [&](const PartialOrientation& o) {
      auto r = rank_via_path_reversals(o, &solver);
      ASSERT_EQ(r.rank, solver.rank_value(o.divisor()));
      ASSERT_EQ(r.path_reversals, static_cast<std::size_t>(r.rank + 1));
      ASSERT_EQ(replay(r.certificate, o), r.orientation);
      ASSERT_TRUE(is_acyclic(r.orientation));
    });
  }
}
