#include "orr/flows.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "orr/reduce.hpp"

namespace orr {

std::optional<VertexId> FlowNetwork::find_vertex(std::string_view name) const {
  for (VertexId v = 0; v < names.size(); ++v)
    if (names[v] == name) return v;
  return std::nullopt;
}

void FlowNetwork::validate() const {
  const std::size_t n = num_vertices();
  if (source >= n || sink >= n) throw Error(ErrorCode::PreconditionViolated, "source or sink out of range");
  if (source == sink) throw Error(ErrorCode::PreconditionViolated, "source and sink coincide");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.from >= n || a.to >= n)
      throw Error(ErrorCode::PreconditionViolated, "arc " + std::to_string(i) + " has a bad endpoint");
    if (a.capacity < 0)
      throw Error(ErrorCode::PreconditionViolated, "arc " + std::to_string(i) + " has negative capacity");
  }
}

FlowNetwork parse_network(std::string_view text, std::string_view source, std::string_view sink) {
  FlowNetwork net;
  std::map<std::string, VertexId, std::less<>> index;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, net.names.size());
    if (fresh) net.names.push_back(name);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks.front().front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (toks.size() != 3) throw Error(ErrorCode::ParseError, where + "expected 'u v capacity'");
    if (toks[0] == toks[1]) throw Error(ErrorCode::LoopEdge, where + "loop arc at '" + toks[0] + "'");
    Int cap = 0;
    try {
      std::size_t used = 0;
      cap = std::stoll(toks[2], &used);
      if (used != toks[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::Overflow, where + "capacity out of range");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, where + "bad capacity '" + toks[2] + "'");
    }
    if (cap < 0) throw Error(ErrorCode::ParseError, where + "negative capacity");
    VertexId u = intern(toks[0]);
    VertexId v = intern(toks[1]);
    net.arcs.push_back({u, v, cap});
  }
  auto s = net.find_vertex(source);
  auto t = net.find_vertex(sink);
  if (!s) throw Error(ErrorCode::UnknownVertex, "unknown source '" + std::string(source) + "'");
  if (!t) throw Error(ErrorCode::UnknownVertex, "unknown sink '" + std::string(sink) + "'");
  if (*s == *t) throw Error(ErrorCode::PreconditionViolated, "source and sink coincide");
  net.source = *s;
  net.sink = *t;
  return net;
}

FlowNetwork load_network_file(const std::filesystem::path& path, std::string_view source, std::string_view sink) {
  return parse_network(read_text_file(path), source, sink);
}

Int cut_capacity(const FlowNetwork& n, const VertexSet& side) {
  Int c = 0;
  for (const Arc& a : n.arcs)
    if (side.contains(a.from) && !side.contains(a.to)) c = checked_add(c, a.capacity);
  return c;
}

FlowResult max_flow(const FlowNetwork& net) {
  net.validate();
  const std::size_t n = net.num_vertices();
  // Residual moves per vertex, in arc-id order: (arc, forward?).
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj(n);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    adj[net.arcs[i].from].emplace_back(i, true);
    adj[net.arcs[i].to].emplace_back(i, false);
  }
  FlowResult r{0, std::vector<Int>(net.arcs.size(), 0), VertexSet(n)};
  auto residual = [&](std::size_t i, bool fwd) { return fwd ? net.arcs[i].capacity - r.flow[i] : r.flow[i]; };

  for (;;) {
    std::vector<std::optional<std::pair<std::size_t, bool>>> via(n);
    VertexSet seen = VertexSet::single(n, net.source);
    std::deque<VertexId> queue{net.source};
    while (!queue.empty() && !seen.contains(net.sink)) {
      VertexId v = queue.front();
      queue.pop_front();
      for (auto [i, fwd] : adj[v]) {
        VertexId w = fwd ? net.arcs[i].to : net.arcs[i].from;
        if (seen.contains(w) || residual(i, fwd) <= 0) continue;
        seen.insert(w);
        via[w] = std::pair{i, fwd};
        queue.push_back(w);
      }
    }
    if (!seen.contains(net.sink)) {
      r.cut = seen;
      break;
    }
    Int bottleneck = INT64_MAX;
    for (VertexId x = net.sink; x != net.source;) {
      auto [i, fwd] = *via[x];
      bottleneck = std::min(bottleneck, residual(i, fwd));
      x = fwd ? net.arcs[i].from : net.arcs[i].to;
    }
    for (VertexId x = net.sink; x != net.source;) {
      auto [i, fwd] = *via[x];
      r.flow[i] += fwd ? bottleneck : -bottleneck;
      x = fwd ? net.arcs[i].from : net.arcs[i].to;
    }
    r.value = checked_add(r.value, bottleneck);
  }

  std::vector<Int> net_out(n, 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    ensure(r.flow[i] >= 0 && r.flow[i] <= net.arcs[i].capacity, "max_flow: capacity violated");
    net_out[net.arcs[i].from] += r.flow[i];
    net_out[net.arcs[i].to] -= r.flow[i];
  }
  for (VertexId v = 0; v < n; ++v)
    if (v != net.source && v != net.sink) ensure(net_out[v] == 0, "max_flow: conservation violated");
  ensure(net_out[net.source] == r.value && net_out[net.sink] == -r.value, "max_flow: value mismatch");
  ensure(cut_capacity(net, r.cut) == r.value, "max_flow: cut capacity differs from flow value");
  return r;
}

namespace {

// One flow phase: arcs follow o (capacity 1), s feeds the surplus of `dt`,
// the deficit drains to t. Flips the flow support, updates dt, and returns
// whether the flow saturated every source arc.
bool flow_phase(PartialOrientation& o, Divisor& dt) {
  const Multigraph& g = o.graph();
  const std::size_t n = g.num_vertices();
  FlowNetwork net;
  for (VertexId v = 0; v < n; ++v) net.names.push_back(g.name(v));
  net.names.push_back("#source");
  net.names.push_back("#sink");
  net.source = n;
  net.sink = n + 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) net.arcs.push_back({o.tail(e), o.head(e), 1});
  Int demand = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (dt[v] > 0) {
      net.arcs.push_back({net.source, v, dt[v]});
      demand = checked_add(demand, dt[v]);
    } else if (dt[v] < 0) {
      net.arcs.push_back({v, net.sink, -dt[v]});
    }
  }
  FlowResult f = max_flow(net);
  const Divisor before = o.divisor();
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (f.flow[e] == 1) o.reverse(e);
  dt -= o.divisor() - before;
  return f.value == demand;
}

void check_full(const PartialOrientation& o, const char* what) {
  if (!o.is_full()) throw Error(ErrorCode::PreconditionViolated, std::string(what) + ": orientation must be full");
}

}  // namespace

PartialOrientation orient_via_flow(const Multigraph& g, const Divisor& d) {
  check_divisor(g, d);
  if (d.degree() != genus(g) - 1)
    throw Error(ErrorCode::WrongDegree, "orientable divisors have degree g - 1 = " + std::to_string(genus(g) - 1));
  PartialOrientation o = base_orientation(g);
  Divisor dt = d - o.divisor();
  if (!flow_phase(o, dt)) throw Error(ErrorCode::Infeasible, "flow falls short: divisor is not orientable");
  ensure(o.divisor() == d, "orient_via_flow: result divisor differs");
  return o;
}

bool is_orientable(const Multigraph& g, const Divisor& d, const Caps& caps) {
  check_divisor(g, d);
  if (d.degree() != genus(g) - 1)
    throw Error(ErrorCode::WrongDegree, "orientable divisors have degree g - 1 = " + std::to_string(genus(g) - 1));
  PartialOrientation o = base_orientation(g);
  Divisor dt = d - o.divisor();
  const bool feasible = flow_phase(o, dt);
  if (feasible) ensure(o.divisor() == d, "is_orientable: flow orientation has the wrong divisor");
  if (g.num_vertices() <= caps.chi_vertices)
    ensure(feasible == (chi_global(g, d, caps).chi >= 0), "is_orientable: flow and chi disagree");
  return feasible;
}

bool is_partially_orientable(const Multigraph& g, const Divisor& d, const Caps& caps) {
  check_divisor(g, d);
  for (VertexId v = 0; v < d.size(); ++v)
    if (d[v] < -1) return false;
  if (d.degree() > genus(g) - 1) return false;
  if (g.num_vertices() <= caps.chi_vertices) return chi_global(g, d, caps).chi_bar >= 0;
  Construction c = construct_orientation(g, d);
  return c.realized && c.orientation.divisor() == d;
}

Divisor break_divisor(const Multigraph& g, const Divisor& d, const RunLimits& limits) {
  return break_divisor(g, d, g.base_vertex(), limits);
}

Divisor break_divisor(const Multigraph& g, const Divisor& d, VertexId q, const RunLimits& limits) {
  check_divisor(g, d);
  const std::size_t n = g.num_vertices();
  if (q >= n) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
  if (d.degree() != genus(g))
    throw Error(ErrorCode::WrongDegree, "break divisors have degree g = " + std::to_string(genus(g)));

  // Invariant: D_O + dt ~ d - (q).
  PartialOrientation o = base_orientation(g);
  Divisor dt = d - Divisor::unit(n, q) - o.divisor();
  std::size_t rounds = 0;
  while (!flow_phase(o, dt)) {
    if (limits.stop.stop_requested()) throw Error(ErrorCode::Cancelled, "break_divisor cancelled");
    if (limits.max_rounds != 0 && ++rounds > limits.max_rounds)
      throw Error(ErrorCode::BudgetExceeded, "break_divisor exceeded its round budget");
    VertexSet surplus(n);
    for (VertexId v = 0; v < n; ++v)
      if (dt[v] > 0) surplus.insert(v);
    VertexSet r = reachable(o, surplus);
    ensure(!r.is_full(), "break_divisor: residual reach covers V");
    apply_move_inplace(o, CutReversal{r});
  }
  ensure(dt == Divisor(n), "break_divisor: flow left a residue");
  Normalized norm = to_q_connected(o, q, limits);
  Divisor out = norm.orientation.divisor() + Divisor::unit(n, q);
  ensure(linearly_equivalent(g, out, d), "break_divisor: result not equivalent to input");
  return out;
}

TorsorResult torsor_act(const PartialOrientation& o, const Divisor& z, const RunLimits& limits) {
  const Multigraph& g = o.graph();
  check_divisor(g, z);
  check_full(o, "torsor_act");
  if (z.degree() != 0) throw Error(ErrorCode::WrongDegree, "torsor action needs a degree-0 divisor");
  std::vector<VertexId> plus, minus;
  for (VertexId v = 0; v < z.size(); ++v) {
    for (Int k = 0; k < z[v]; ++k) plus.push_back(v);
    for (Int k = 0; k < -z[v]; ++k) minus.push_back(v);
  }
  CertificateRecorder rec(o);
  // Reversing a directed path p -> ... -> q adds (p) - (q).
  for (std::size_t i = 0; i < plus.size(); ++i) {
    rec.append(to_q_connected(rec.current(), plus[i], limits).certificate);
    auto path = shortest_directed_path(rec.current(), plus[i], minus[i]);
    ensure(!path.empty(), "torsor_act: p-connected orientation without a path");
    rec.apply(PathReversal{path});
  }
  ensure(linearly_equivalent(g, rec.current().divisor(), o.divisor() + z), "torsor_act: wrong class");
  return TorsorResult{rec.current(), rec.certificate()};
}

MfmcResult mfmc_via_orientability(const FlowNetwork& net, const Caps& caps) {
  net.validate();
  const std::size_t n = net.num_vertices();
  Int total = 0;
  for (const Arc& a : net.arcs) total = checked_add(total, a.capacity);
  if (total > caps.mfmc_capacity)
    throw Error(ErrorCode::CapacityTooLarge, "total capacity " + std::to_string(total) + " exceeds the expansion cap " +
                                                 std::to_string(caps.mfmc_capacity));
  if (n > caps.chi_vertices || n >= 63)
    throw Error(ErrorCode::TooLarge, "too many vertices for subset enumeration");

  // Parallel-edge expansion; each copy remembers its arc.
  std::vector<std::size_t> owner;
  std::vector<VertexId> tail, head;
  Divisor dn(n, -1);
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    for (Int c = 0; c < net.arcs[i].capacity; ++c) {
      owner.push_back(i);
      tail.push_back(net.arcs[i].from);
      head.push_back(net.arcs[i].to);
      ++dn[net.arcs[i].to];
    }

  // D_N + k((s) - (t)) is orientable iff k <= χ(S, D_N) for every S with
  // t in S and s not in S; χ(S, D_N) counts the copies entering S.
  Int k = INT64_MAX;
  VertexSet best(n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!(mask >> net.sink & 1) || (mask >> net.source & 1)) continue;
    VertexSet s = VertexSet::from_mask(n, mask);
    Int chi = 0, inside = 0;
    for (VertexId v : s.members()) chi += dn[v] + 1;
    for (std::size_t c = 0; c < owner.size(); ++c)
      if (s.contains(tail[c]) && s.contains(head[c])) ++inside;
    chi -= inside;
    if (chi < k) {
      k = chi;
      best = s;
    }
  }

  // Realize the target by k path reversals from s to t.
  for (Int step = 0; step < k; ++step) {
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t c = 0; c < owner.size(); ++c) out[tail[c]].push_back(c);
    std::vector<std::optional<std::size_t>> via(n);
    VertexSet seen = VertexSet::single(n, net.source);
    std::deque<VertexId> queue{net.source};
    while (!queue.empty() && !seen.contains(net.sink)) {
      VertexId v = queue.front();
      queue.pop_front();
      for (std::size_t c : out[v]) {
        if (seen.contains(head[c])) continue;
        seen.insert(head[c]);
        via[head[c]] = c;
        queue.push_back(head[c]);
      }
    }
    ensure(seen.contains(net.sink), "mfmc: orientable target without a directed s-t path");
    for (VertexId x = net.sink; x != net.source;) {
      std::size_t c = *via[x];
      std::swap(tail[c], head[c]);
      x = head[c];
    }
  }

  MfmcResult r{k, std::vector<Int>(net.arcs.size(), 0), best.complement()};
  for (std::size_t c = 0; c < owner.size(); ++c)
    if (tail[c] != net.arcs[owner[c]].from) ++r.flow[owner[c]];
  ensure(cut_capacity(net, r.cut) == k, "mfmc: cut capacity differs from k");
  return r;
}

}  // namespace orr
