#include <gtest/gtest.h>

#include "orr/moves.hpp"
#include "orr/reduce.hpp"
#include "test_support.hpp"

using namespace orr;
using namespace orr::testing;

namespace {

PartialOrientation c3_cyclic() { return orient_by_names(c3(), {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }
PartialOrientation c3_acyclic() { return orient_by_names(c3(), {{"a", "b"}, {"a", "c"}, {"b", "c"}}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Orientation, IndegreeDivisor) {
  EXPECT_EQ(c3_cyclic().divisor(), (Divisor{0, 0, 0}));
  EXPECT_EQ(c3_acyclic().divisor(), (Divisor{-1, 0, 1}));
  EXPECT_EQ(PartialOrientation(k4()).divisor(), (Divisor{-1, -1, -1, -1}));
}

TEST(Orientation, DegreeOfDivisor) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_multigraph(2 + trial % 4, trial % 3, rng);
    for_each_orientation(g, false, [&](const PartialOrientation& o) {
      ASSERT_EQ(o.divisor().degree(), static_cast<Int>(o.num_oriented()) - static_cast<Int>(g.num_vertices()));
      if (o.is_full()) {
        ASSERT_EQ(o.divisor().degree(), genus(g) - 1);
      }
    });
  }
}

TEST(Orientation, Reachable) {
  auto g = c3();
  auto a = VertexSet::single(3, 0);
  EXPECT_TRUE(reachable(c3_cyclic(), a).is_full());
  auto one = orient_by_names(g, {{"a", "b"}});
  EXPECT_EQ(reachable(one, a), VertexSet::from_mask(3, 0b011));
  EXPECT_EQ(reachable(PartialOrientation(g), a), a);
}

TEST(Orientation, Classify) {
  auto c = classify(c3_cyclic(), 0);
  EXPECT_FALSE(c.acyclic);
  EXPECT_TRUE(c.sourceless);
  EXPECT_TRUE(c.full);
  EXPECT_TRUE(c.q_connected);
  c = classify(c3_acyclic(), 0);
  EXPECT_TRUE(c.acyclic);
  EXPECT_FALSE(c.sourceless);
  EXPECT_TRUE(c.full);
  EXPECT_TRUE(c.q_connected);
  PartialOrientation empty(c3());
  for (VertexId q = 0; q < 3; ++q) {
    c = classify(empty, q);
    EXPECT_TRUE(c.acyclic);
    EXPECT_FALSE(c.sourceless);
    EXPECT_FALSE(c.full);
    EXPECT_FALSE(c.q_connected);
  }
}

TEST(Orientation, CycleDetection) {
  auto cyc = find_directed_cycle(c3_cyclic());
  EXPECT_EQ(cyc.size(), 3u);
  EXPECT_NO_THROW(apply_move(c3_cyclic(), CycleReversal{cyc}));
  auto b = b2();
  auto two = orient_by_names(b, {{"u", "v"}, {"v", "u"}});
  EXPECT_EQ(find_directed_cycle(two).size(), 2u);
}

TEST(Orientation, FileFormat) {
  auto g = c3();
  auto o = parse_orientation(g, "0 >\n2 <\n");
  EXPECT_EQ(o.head(0), g.vertex("b"));
  EXPECT_FALSE(o.is_oriented(1));
  EXPECT_EQ(o.head(2), g.vertex("c"));
  EXPECT_EQ(parse_orientation(g, format_orientation(o)), o);
  EXPECT_EQ(code_of([&] { parse_orientation(g, "3 >\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_orientation(g, "0 ^\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(ascii_orientation(o), "0: a -> b\n1: b -- c\n2: a -> c\n");
}

TEST(Moves, EdgePivotExample) {
  auto g = c3();
  auto o = orient_by_names(g, {{"a", "b"}});
  EXPECT_EQ(o.divisor(), (Divisor{-1, 0, -1}));
  auto p = apply_move(o, EdgePivot{0, 1, g.vertex("b")});
  EXPECT_FALSE(p.is_oriented(0));
  EXPECT_EQ(p.head(1), g.vertex("b"));
  EXPECT_EQ(p.tail(1), g.vertex("c"));
  EXPECT_EQ(p.divisor(), o.divisor());
  // Inverse pivot restores the start.
  EXPECT_EQ(apply_move(p, EdgePivot{1, 0, g.vertex("b")}), o);
}

TEST(Moves, PathReversalExample) {
  auto o = c3_cyclic();
  auto p = apply_move(o, PathReversal{{0}});
  EXPECT_EQ(p.divisor(), (Divisor{1, -1, 0}));
  EXPECT_EQ(p.divisor(), o.divisor() + Divisor::unit(3, 0) - Divisor::unit(3, 1));
}

TEST(Moves, CycleReversalExample) {
  auto o = c3_cyclic();
  auto p = apply_move(o, CycleReversal{{0, 1, 2}});
  EXPECT_EQ(p.divisor(), (Divisor{0, 0, 0}));
  EXPECT_EQ(p.head(0), 0u);
  EXPECT_EQ(apply_move(p, CycleReversal{{2, 1, 0}}), o);
}

TEST(Moves, CutReversalFiresTheSide) {
  auto g = c3();
  auto o = orient_by_names(g, {{"b", "a"}, {"c", "a"}, {"b", "c"}});
  auto side = VertexSet::single(3, 0);
  auto p = apply_move(o, CutReversal{side});
  EXPECT_EQ(p.divisor(), fire_set(g, o.divisor(), side));
  auto back = apply_move(p, CutReversal{side});
  EXPECT_EQ(back, o);
  EXPECT_EQ(back.divisor(), o.divisor());
}

TEST(Moves, JacobsLadder) {
  // Path a -> b -> c -> d with unoriented terminal edge {d, a}.
  auto g = c4();
  auto o = orient_by_names(g, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  auto p = apply_move(o, JacobsLadder{{0, 1, 2}, 3});
  EXPECT_FALSE(p.is_oriented(0));
  EXPECT_EQ(p.head(1), g.vertex("b"));
  EXPECT_EQ(p.head(2), g.vertex("c"));
  EXPECT_EQ(p.head(3), g.vertex("d"));
  EXPECT_EQ(p.divisor(), o.divisor());
}

TEST(Moves, Preconditions) {
  auto g = c3();
  auto o = orient_by_names(g, {{"a", "b"}});
  auto bad = [&](const Move& m) { return code_of([&] { apply_move(o, m); }); };
  EXPECT_EQ(bad(EdgePivot{0, 1, g.vertex("a")}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(EdgePivot{1, 0, g.vertex("b")}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(CycleReversal{{0, 1, 2}}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(CutReversal{VertexSet::single(3, 0)}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(CutReversal{VertexSet(3)}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(PathReversal{{1}}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(JacobsLadder{{0}, 0}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(UnorientEdge{2}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(OrientEdge{0, g.vertex("a")}), ErrorCode::PreconditionViolated);
  EXPECT_EQ(bad(OrientEdge{1, g.vertex("a")}), ErrorCode::PreconditionViolated);
  // Inconsistent cut: a->b out of {a}, c->a into {a}.
  auto mixed = orient_by_names(g, {{"a", "b"}, {"c", "a"}});
  EXPECT_EQ(code_of([&] { apply_move(mixed, CutReversal{VertexSet::single(3, 0)}); }),
            ErrorCode::PreconditionViolated);
}

TEST(Moves, RandomMovesKeepDivisorContracts) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_multigraph(3 + trial % 3, 1 + trial % 3, rng);
    const std::size_t n = g.num_vertices();
    for_each_orientation(g, false, [&](const PartialOrientation& o) {
      Divisor d = o.divisor();
      for (EdgeId a = 0; a < g.num_edges(); ++a)
        for (EdgeId b = 0; b < g.num_edges(); ++b) {
          if (!o.is_oriented(a) || o.is_oriented(b) || !g.edge(b).touches(o.head(a))) continue;
          ASSERT_EQ(apply_move(o, EdgePivot{a, b, o.head(a)}).divisor(), d);
        }
      auto cyc = find_directed_cycle(o);
      if (!cyc.empty()) {
        ASSERT_EQ(apply_move(o, CycleReversal{cyc}).divisor(), d);
      }
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        auto s = VertexSet::from_mask(n, mask);
        PartialOrientation p = o;
        try {
          apply_move_inplace(p, CutReversal{s});
        } catch (const Error&) {
          continue;
        }
        Divisor toward = fire_set(g, d, s);
        Divisor away = fire_set(g, d, s.complement());
        ASSERT_TRUE(p.divisor() == toward || p.divisor() == away);
        ASSERT_TRUE(linearly_equivalent(g, p.divisor(), d));
      }
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
          auto path = shortest_directed_path(o, u, v);
          if (path.empty()) continue;
          ASSERT_EQ(apply_move(o, PathReversal{path}).divisor(), d + Divisor::unit(n, u) - Divisor::unit(n, v));
        }
    });
  }
}

TEST(Certificate, Replay) {
  auto g = c3();
  auto o = orient_by_names(g, {{"a", "b"}});
  CertificateRecorder rec(o);
  EXPECT_EQ(replay(rec.certificate(), o), o);
  rec.apply(EdgePivot{0, 1, g.vertex("b")});
  rec.apply(EdgePivot{1, 0, g.vertex("b")});
  auto cert = rec.certificate();
  EXPECT_EQ(replay(cert, o), o);
  EXPECT_EQ(code_of([&] { replay(cert, c3_cyclic()); }), ErrorCode::FingerprintMismatch);
  cert.moves.push_back(UnorientEdge{2});
  EXPECT_EQ(code_of([&] { replay(cert, o); }), ErrorCode::PreconditionViolated);
}

TEST(Orientation, FingerprintSeparatesGraphs) {
  EXPECT_NE(PartialOrientation(c3()).fingerprint(), PartialOrientation(load_graph("x y\ny z\nz x\n")).fingerprint());
  EXPECT_NE(c3_cyclic().fingerprint(), c3_acyclic().fingerprint());
}
