#include "orr/reduce.hpp"

#include <algorithm>
#include <limits>

namespace orr {

BurnTrace dhar_burn(const Multigraph& g, const Divisor& d, VertexId q) {
  check_divisor(g, d);
  const std::size_t n = g.num_vertices();
  if (q >= n) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
  BurnTrace trace;
  for (VertexId v : g.lex_order()) {
    if (v != q && d[v] < 0) {
      trace.reason = "vertex '" + g.name(v) + "' is in debt";
      trace.unburnt = VertexSet(n);
      return trace;
    }
  }

  VertexSet unburnt = VertexSet::all(n);
  unburnt.erase(q);
  // outdeg[v]: edges from v to burnt vertices.
  std::vector<Int> outdeg(n, 0);
  for (EdgeId e : g.incident_edges(q)) ++outdeg[g.edge(e).other(q)];
  outdeg[q] = 0;

  bool progress = true;
  while (progress) {
    progress = false;
    for (VertexId v : g.lex_order()) {
      if (!unburnt.contains(v) || outdeg[v] <= d[v]) continue;
      unburnt.erase(v);
      trace.burn_order.push_back(v);
      for (EdgeId e : g.incident_edges(v)) ++outdeg[g.edge(e).other(v)];
      progress = true;
      break;
    }
  }
  trace.q_reduced = unburnt.empty();
  if (!trace.q_reduced) {
    trace.reason = "unburnt set can fire without debt:";
    for (VertexId v : g.lex_order())
      if (unburnt.contains(v)) trace.reason += " " + g.name(v);
  }
  trace.unburnt = std::move(unburnt);
  return trace;
}

bool is_q_reduced(const Multigraph& g, const Divisor& d, VertexId q) { return dhar_burn(g, d, q).q_reduced; }

ReducedForm reduce(const Multigraph& g, const Divisor& input, VertexId q) {
  check_divisor(g, input);
  const std::size_t n = g.num_vertices();
  if (q >= n) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
  Divisor d = input;
  // Invariant: d = input - Δ·fired.
  std::vector<Int> fired(n, 0);

  // Phase 1: every v != q in debt borrows (fires V \ {v}) just enough times
  // to leave debt; q acts as the bank.
  for (;;) {
    VertexId debtor = n;
    for (VertexId v : g.lex_order())
      if (v != q && d[v] < 0) {
        debtor = v;
        break;
      }
    if (debtor == n) break;
    const Int deg = g.degree(debtor);
    const Int k = checked_add(-d[debtor], deg - 1) / deg;
    for (EdgeId e : g.incident_edges(debtor)) {
      VertexId u = g.edge(e).other(debtor);
      d[u] = checked_sub(d[u], k);
    }
    d[debtor] = checked_add(d[debtor], checked_mul(k, deg));
    fired[debtor] = checked_sub(fired[debtor], k);
  }

  // Phase 2: fire the unburnt set as many times as stays debt-free.
  for (;;) {
    BurnTrace t = dhar_burn(g, d, q);
    ensure(t.reason.empty() || !t.unburnt.empty(), "reduce: phase 1 left debt");
    if (t.q_reduced) break;
    const VertexSet& a = t.unburnt;
    std::vector<Int> out(n, 0);
    for (const Edge& e : g.edges()) {
      bool x = a.contains(e.first), y = a.contains(e.second);
      if (x && !y) ++out[e.first];
      if (y && !x) ++out[e.second];
    }
    Int m = std::numeric_limits<Int>::max();
    for (VertexId v : a.members())
      if (out[v] > 0) m = std::min(m, d[v] / out[v]);
    ensure(m >= 1 && m != std::numeric_limits<Int>::max(), "reduce: unburnt set cannot fire");
    for (const Edge& e : g.edges()) {
      bool x = a.contains(e.first), y = a.contains(e.second);
      if (x == y) continue;
      VertexId from = x ? e.first : e.second;
      VertexId to = x ? e.second : e.first;
      d[from] = checked_sub(d[from], m);
      d[to] = checked_add(d[to], m);
    }
    for (VertexId v : a.members()) fired[v] = checked_add(fired[v], m);
  }

  Int lo = *std::min_element(fired.begin(), fired.end());
  for (Int& f : fired) f = checked_sub(f, lo);
  return ReducedForm{std::move(d), std::move(fired), q};
}

bool linearly_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
  check_divisor(g, a);
  check_divisor(g, b);
  if (a.degree() != b.degree()) return false;
  const VertexId q = g.base_vertex();
  return reduce(g, a, q).divisor == reduce(g, b, q).divisor;
}

}  // namespace orr
