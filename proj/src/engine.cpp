#include "orr/engine.hpp"

#include <algorithm>
#include <deque>

namespace orr {

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Acyclic: return "Acyclic";
    case Outcome::Sourceless: return "Sourceless";
    case Outcome::CycleLocked: return "CycleLocked";
    case Outcome::EdgeIntoS: return "EdgeIntoS";
  }
  return "Unknown";
}

namespace {

class Budget {
 public:
  explicit Budget(const RunLimits& limits) : limits_(limits) {}

  void tick(const char* where) {
    if (limits_.stop.stop_requested()) throw Error(ErrorCode::Cancelled, std::string(where) + " cancelled");
    if (limits_.max_rounds != 0 && ++rounds_ > limits_.max_rounds)
      throw Error(ErrorCode::BudgetExceeded,
                  std::string(where) + " exceeded " + std::to_string(limits_.max_rounds) + " rounds");
  }

 private:
  const RunLimits& limits_;
  std::size_t rounds_ = 0;
};

// Pivots at vertices w outside X that have an unoriented edge into X and an
// edge oriented toward w from outside X, until no such vertex remains.
void exhaust_pivots(CertificateRecorder& rec, const VertexSet& x) {
  const Multigraph& g = rec.current().graph();
  for (bool again = true; again;) {
    again = false;
    for (VertexId w = 0; w < g.num_vertices() && !again; ++w) {
      if (x.contains(w)) continue;
      const PartialOrientation& o = rec.current();
      std::optional<EdgeId> un, in;
      for (EdgeId e : g.incident_edges(w)) {
        VertexId u = g.edge(e).other(w);
        if (!un && !o.is_oriented(e) && x.contains(u)) un = e;
        if (!in && o.points_to(e, w) && !x.contains(u)) in = e;
      }
      if (un && in) {
        rec.apply(EdgePivot{*in, *un, w});
        again = true;
      }
    }
  }
}

bool has_internal_incoming(const PartialOrientation& o, const VertexSet& x, VertexId w) {
  const Multigraph& g = o.graph();
  for (EdgeId e : g.incident_edges(w))
    if (o.points_to(e, w) && !x.contains(g.edge(e).other(w))) return true;
  return false;
}

bool on_boundary(const Multigraph& g, const VertexSet& x, VertexId w) {
  for (EdgeId e : g.incident_edges(w))
    if (x.contains(g.edge(e).other(w))) return true;
  return false;
}

// The growth phase of oriented Dhar; returns the final X.
VertexSet dhar_grow(CertificateRecorder& rec, VertexSet x) {
  const Multigraph& g = rec.current().graph();
  for (;;) {
    exhaust_pivots(rec, x);
    std::vector<VertexId> add;
    for (VertexId w = 0; w < g.num_vertices(); ++w)
      if (!x.contains(w) && on_boundary(g, x, w) && !has_internal_incoming(rec.current(), x, w)) add.push_back(w);
    if (add.empty()) return x;
    for (VertexId w : add) x.insert(w);
  }
}

DichotomyResult make_result(Outcome outcome, VertexSet locked, const CertificateRecorder& rec) {
  DichotomyResult r{outcome, std::move(locked), rec.current(), rec.certificate(), std::nullopt};
  return r;
}

DichotomyResult finish_dhar(const CertificateRecorder& rec, const VertexSet& x) {
  const std::size_t n = rec.current().graph().num_vertices();
  if (x.is_full()) {
    ensure(is_acyclic(rec.current()), "oriented Dhar reached V with a cycle");
    return make_result(Outcome::Acyclic, VertexSet(n), rec);
  }
  return make_result(Outcome::CycleLocked, x, rec);
}

VertexSet positive_support(const Divisor& d) {
  VertexSet s(d.size());
  for (VertexId v = 0; v < d.size(); ++v)
    if (d[v] > 0) s.insert(v);
  return s;
}

VertexSet negative_support(const Divisor& d) {
  VertexSet s(d.size());
  for (VertexId v = 0; v < d.size(); ++v)
    if (d[v] < 0) s.insert(v);
  return s;
}

std::optional<EdgeId> least_unoriented_edge(const PartialOrientation& o, VertexId v) {
  for (EdgeId e : o.graph().incident_edges(v))
    if (!o.is_oriented(e)) return e;
  return std::nullopt;
}

std::optional<EdgeId> least_incoming_edge(const PartialOrientation& o, VertexId v) {
  for (EdgeId e : o.graph().incident_edges(v))
    if (o.points_to(e, v)) return e;
  return std::nullopt;
}

struct Search {
  VertexSet reached;
  std::optional<VertexId> target;
  std::vector<EdgeId> path;  // from some source vertex to target
};

// Breadth-first search along oriented edges from all of `from` at once,
// stopping at the first dequeued vertex satisfying `is_target`.
template <class Pred>
Search search_from(const PartialOrientation& o, const VertexSet& from, Pred is_target) {
  const Multigraph& g = o.graph();
  const std::size_t n = g.num_vertices();
  Search s{from, std::nullopt, {}};
  std::vector<std::optional<EdgeId>> via(n);
  std::deque<VertexId> queue;
  for (VertexId v : from.members()) queue.push_back(v);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (is_target(v)) {
      s.target = v;
      for (VertexId x = v; via[x]; x = o.tail(*via[x])) s.path.push_back(*via[x]);
      std::reverse(s.path.begin(), s.path.end());
      return s;
    }
    for (EdgeId e : g.incident_edges(v)) {
      if (!o.is_oriented(e) || o.tail(e) != v) continue;
      VertexId w = o.head(e);
      if (s.reached.contains(w)) continue;
      s.reached.insert(w);
      via[w] = e;
      queue.push_back(w);
    }
  }
  return s;
}

VertexSet component_within(const Multigraph& g, const VertexSet& allowed, VertexId start) {
  VertexSet comp = VertexSet::single(g.num_vertices(), start);
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident_edges(v)) {
      VertexId w = g.edge(e).other(v);
      if (allowed.contains(w) && !comp.contains(w)) {
        comp.insert(w);
        stack.push_back(w);
      }
    }
  }
  return comp;
}

}  // namespace

DichotomyResult oriented_dhar(const PartialOrientation& o) {
  CertificateRecorder rec(o);
  const std::size_t n = o.graph().num_vertices();
  if (is_acyclic(o)) return make_result(Outcome::Acyclic, VertexSet(n), rec);
  VertexSet x = dhar_grow(rec, o.sources());
  return finish_dhar(rec, x);
}

DichotomyResult unfurl(const PartialOrientation& o, const RunLimits& limits) {
  CertificateRecorder rec(o);
  Budget budget(limits);
  const Multigraph& g = o.graph();
  const std::size_t n = g.num_vertices();
  std::optional<DichotomyResult> result;
  for (;;) {
    if (is_acyclic(rec.current())) {
      result = make_result(Outcome::Acyclic, VertexSet(n), rec);
      break;
    }
    VertexSet sources = rec.current().sources();
    if (sources.empty()) {
      result = make_result(Outcome::Sourceless, VertexSet(n), rec);
      break;
    }
    VertexSet x = dhar_grow(rec, sources);
    if (x.is_full()) {
      ensure(is_acyclic(rec.current()), "unfurl: oriented Dhar reached V with a cycle");
      result = make_result(Outcome::Acyclic, VertexSet(n), rec);
      break;
    }
    budget.tick("unfurl");
    rec.apply(CutReversal{x});
  }
  ensure(linearly_equivalent(g, o.divisor(), result->orientation.divisor()), "unfurl changed the divisor class");
  return *result;
}

DichotomyResult modified_unfurl(const PartialOrientation& o, const VertexSet& s, const RunLimits& limits) {
  const Multigraph& g = o.graph();
  const std::size_t n = g.num_vertices();
  if (s.universe() != n) throw Error(ErrorCode::PreconditionViolated, "modified_unfurl: set has the wrong universe");
  if (s.empty()) throw Error(ErrorCode::PreconditionViolated, "modified_unfurl: source set is empty");
  VertexSet sources = o.sources();
  for (VertexId v : s.members())
    if (!sources.contains(v))
      throw Error(ErrorCode::PreconditionViolated, "modified_unfurl: '" + g.name(v) + "' is not a source");
  if (component_within(g, s, s.members().front()) != s)
    throw Error(ErrorCode::PreconditionViolated, "modified_unfurl: G[S] is not connected");

  CertificateRecorder rec(o);
  Budget budget(limits);
  VertexSet x = s;
  for (;;) {
    exhaust_pivots(rec, x);
    const PartialOrientation& cur = rec.current();
    std::optional<VertexId> grow;
    for (EdgeId e = 0; e < g.num_edges() && !grow; ++e) {
      const Edge& ed = g.edge(e);
      if (cur.is_oriented(e) || x.contains(ed.first) == x.contains(ed.second)) continue;
      grow = x.contains(ed.first) ? ed.second : ed.first;
    }
    if (grow) {
      x.insert(*grow);
      continue;
    }
    if (x.is_full()) {
      ensure(is_acyclic(cur), "modified_unfurl: X reached V with a cycle");
      return make_result(Outcome::Acyclic, VertexSet(n), rec);
    }
    budget.tick("modified_unfurl");
    rec.apply(CutReversal{x});
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (rec.current().is_oriented(e) && s.contains(rec.current().head(e))) {
        DichotomyResult r = make_result(Outcome::EdgeIntoS, VertexSet(n), rec);
        r.edge_into_s = e;
        return r;
      }
    }
    x = s;
  }
}

Construction construct_orientation(const Multigraph& g, const Divisor& d, const RunLimits& limits) {
  check_divisor(g, d);
  if (d.degree() > genus(g) - 1)
    throw Error(ErrorCode::DegreeTooHigh, "degree " + std::to_string(d.degree()) + " exceeds g - 1 = " +
                                              std::to_string(genus(g) - 1));
  const std::size_t n = g.num_vertices();
  CertificateRecorder rec{PartialOrientation(g)};
  Budget budget(limits);
  // Invariant: D_O + di ~ d.
  Divisor di = d + ones(g);
  const Divisor zero(n);

  while (di != zero) {
    budget.tick("construct_orientation");
    const PartialOrientation& o = rec.current();
    VertexSet pos = positive_support(di);
    VertexSet neg = negative_support(di);

    if (!pos.empty() && !o.is_full()) {
      auto found = search_from(o, pos, [&](VertexId v) { return least_unoriented_edge(o, v).has_value(); });
      if (found.target) {
        VertexId t = *found.target;
        EdgeId te = *least_unoriented_edge(o, t);
        if (found.path.empty()) {
          rec.apply(OrientEdge{te, t});
          --di[t];
        } else {
          VertexId s = o.tail(found.path.front());
          EdgeId first = found.path.front();
          rec.apply(JacobsLadder{found.path, te});
          rec.apply(OrientEdge{first, s});
          --di[s];
        }
      } else {
        ensure(!found.reached.is_full(), "construct: reach of S covers V in a partial orientation");
        rec.apply(CutReversal{found.reached});
      }
    } else if (!pos.empty()) {
      ensure(!neg.empty(), "construct: full orientation with surplus only");
      auto found = search_from(o, pos, [&](VertexId v) { return neg.contains(v); });
      if (found.target) {
        VertexId r = *found.target;
        VertexId s = o.tail(found.path.front());
        rec.apply(PathReversal{found.path});
        --di[s];
        ++di[r];
      } else {
        rec.apply(CutReversal{found.reached});
      }
    } else {
      bool unoriented = false;
      for (VertexId r : neg.members()) {
        if (auto e = least_incoming_edge(o, r)) {
          rec.apply(UnorientEdge{*e});
          ++di[r];
          unoriented = true;
          break;
        }
      }
      if (unoriented) continue;
      VertexSet x = component_within(g, neg, neg.members().front());
      DichotomyResult res = modified_unfurl(o, x, limits);
      rec.append(res.certificate);
      if (res.outcome == Outcome::EdgeIntoS) {
        VertexId r = rec.current().head(*res.edge_into_s);
        rec.apply(UnorientEdge{*res.edge_into_s});
        ++di[r];
        continue;
      }
      ensure(res.outcome == Outcome::Acyclic, "construct: unexpected modified unfurl outcome");
      Construction c{false, rec.current(), rec.current().divisor() + di, rec.certificate()};
      ensure(linearly_equivalent(g, c.obstruction, d), "construct: obstruction not equivalent to input");
      return c;
    }
  }
  Construction c{true, rec.current(), Divisor(n), rec.certificate()};
  ensure(linearly_equivalent(g, c.orientation.divisor(), d), "construct: realized divisor not equivalent");
  return c;
}

Normalized to_q_connected(const PartialOrientation& o, VertexId q, const RunLimits& limits) {
  const Multigraph& g = o.graph();
  const std::size_t n = g.num_vertices();
  if (q >= n) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
  VertexSet sources = o.sources();
  if (!o.is_full() && !sources.empty() && sources != VertexSet::single(n, q))
    throw Error(ErrorCode::PreconditionViolated,
                "to_q_connected: orientation must be full, sourceless, or have '" + g.name(q) + "' as only source");
  CertificateRecorder rec(o);
  Budget budget(limits);
  for (;;) {
    VertexSet reach = reachable(rec.current(), VertexSet::single(n, q));
    if (reach.is_full()) break;
    bool pivoted = false;
    for (VertexId w = 0; w < n && !pivoted; ++w) {
      if (reach.contains(w)) continue;
      const PartialOrientation& cur = rec.current();
      std::optional<EdgeId> un;
      for (EdgeId e : g.incident_edges(w))
        if (!cur.is_oriented(e) && reach.contains(g.edge(e).other(w))) {
          un = e;
          break;
        }
      auto in = least_incoming_edge(cur, w);
      if (un && in) {
        rec.apply(EdgePivot{*in, *un, w});
        pivoted = true;
      }
    }
    if (pivoted) continue;
    budget.tick("to_q_connected");
    rec.apply(CutReversal{reach});
  }
  return Normalized{rec.current(), rec.certificate()};
}

std::optional<Normalized> q_connected_orientation(const Multigraph& g, const Divisor& d, VertexId q,
                                                  const RunLimits& limits) {
  check_divisor(g, d);
  const std::size_t n = g.num_vertices();
  if (q >= n) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
  const Int deg = d.degree();
  if (deg > genus(g) - 1) throw Error(ErrorCode::DegreeTooHigh, "degree exceeds g - 1");

  if (deg == genus(g) - 1) {
    Construction c = construct_orientation(g, d, limits);
    ensure(c.realized && c.orientation.is_full(), "degree g-1 divisor without an orientation");
    Normalized norm = to_q_connected(c.orientation, q, limits);
    CertificateRecorder rec{PartialOrientation(g)};
    rec.append(c.certificate);
    rec.append(norm.certificate);
    return Normalized{rec.current(), rec.certificate()};
  }

  Construction c = construct_orientation(g, d + Divisor::unit(n, q), limits);
  if (!c.realized) return std::nullopt;
  CertificateRecorder rec{PartialOrientation(g)};
  rec.append(c.certificate);
  DichotomyResult u = unfurl(rec.current(), limits);
  if (u.outcome != Outcome::Sourceless) return std::nullopt;
  rec.append(u.certificate);
  rec.apply(UnorientEdge{*least_incoming_edge(rec.current(), q)});
  rec.append(to_q_connected(rec.current(), q, limits).certificate);
  ensure(classify(rec.current(), q).q_connected, "q-connected normalization failed");
  ensure(linearly_equivalent(g, rec.current().divisor(), d), "q-connected orientation has the wrong class");
  return Normalized{rec.current(), rec.certificate()};
}

bool equivalent(const PartialOrientation& a, const PartialOrientation& b) {
  if (!a.graph().same_as(b.graph())) throw Error(ErrorCode::GraphMismatch, "orientations live on different graphs");
  return linearly_equivalent(a.graph(), a.divisor(), b.divisor());
}

PathReversalRank rank_via_path_reversals(const PartialOrientation& o, RankSolver* solver, const RunLimits& limits) {
  const Multigraph& g = o.graph();
  const std::size_t n = g.num_vertices();
  std::optional<RankSolver> local;
  if (solver == nullptr) solver = &local.emplace(g);
  if (!solver->graph().same_as(g)) throw Error(ErrorCode::GraphMismatch, "rank solver built for another graph");

  const Divisor d = o.divisor();
  RankCertificate rc = solver->rank(d);
  CertificateRecorder rec(o);
  PathReversalRank out{rc.rank, o, {}, 0};

  if (rc.rank >= 0) {
    // d - e1 + e2 has rank -1 and degree deg d; e1, e2 have disjoint support.
    const Divisor& e1 = rc.losing_removal;
    Divisor e2(n);
    for (Int k = 0; k <= rc.rank; ++k) {
      bool added = false;
      for (VertexId v : g.lex_order()) {
        Divisor trial = e2 + Divisor::unit(n, v);
        if (solver->rank_value(d - e1 + trial) == -1) {
          e2 = trial;
          added = true;
          break;
        }
      }
      ensure(added, "no chip keeps the divisor non-special");
    }
    std::vector<VertexId> ps, qs;
    for (VertexId v = 0; v < n; ++v) {
      ensure(e1[v] == 0 || e2[v] == 0, "removed and added chips overlap");
      for (Int k = 0; k < e1[v]; ++k) ps.push_back(v);
      for (Int k = 0; k < e2[v]; ++k) qs.push_back(v);
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
      DichotomyResult u = unfurl(rec.current(), limits);
      ensure(u.outcome == Outcome::Sourceless, "expected a sourceless representative");
      rec.append(u.certificate);
      rec.append(to_q_connected(rec.current(), qs[i], limits).certificate);
      auto path = shortest_directed_path(rec.current(), qs[i], ps[i]);
      ensure(!path.empty(), "q-connected orientation without a path");
      rec.apply(PathReversal{path});
      ++out.path_reversals;
    }
  }
  DichotomyResult last = unfurl(rec.current(), limits);
  ensure(last.outcome == Outcome::Acyclic, "path reversals did not reach an acyclic class");
  rec.append(last.certificate);
  out.orientation = rec.current();
  out.certificate = rec.certificate();
  return out;
}

}  // namespace orr
