#include "orr/suites.hpp"

#include <map>
#include <random>
#include <set>

#include "orr/engine.hpp"
#include "orr/flows.hpp"
#include "orr/oracle.hpp"
#include "orr/rank.hpp"

namespace orr::suites {

void Report::fail(std::string what) {
  if (passed) counterexample = std::move(what);
  passed = false;
}

void Report::merge(const Report& other) {
  checked += other.checked;
  if (!other.passed) fail(other.counterexample);
}

namespace {

std::string show(const Multigraph& g, const Divisor& d) {
  std::string s = "{";
  for (VertexId v = 0; v < d.size(); ++v) s += (v ? ", " : "") + g.name(v) + ": " + std::to_string(d[v]);
  return s + "}";
}

std::string show(const PartialOrientation& o) {
  std::string s;
  for (EdgeId e = 0; e < o.num_edges(); ++e)
    s += o.state(e) == EdgeState::TowardSecond ? '>' : o.state(e) == EdgeState::TowardFirst ? '<' : '-';
  return "orientation " + s;
}

std::string where(const Multigraph& g) {
  std::string s = "graph [";
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    s += (e ? ", " : "") + g.name(g.edge(e).first) + "-" + g.name(g.edge(e).second);
  return s + "]: ";
}

template <class F>
void for_each_in_box(std::size_t n, std::span<const Int> lo, std::span<const Int> hi, F&& f) {
  std::vector<Int> v(lo.begin(), lo.end());
  for (;;) {
    if (!f(Divisor(v))) return;
    std::size_t i = 0;
    while (i < n && ++v[i] > hi[i]) {
      v[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

// Calls f(d) for every d in the box until f returns false.
template <class F>
void for_each_in_box(std::size_t n, Box box, F&& f) {
  std::vector<Int> lo(n, box.lo), hi(n, box.hi);
  for_each_in_box(n, lo, hi, f);
}

template <class F>
void for_each_orientation(const Multigraph& g, bool full_only, const Caps& caps, F&& f) {
  auto stream = full_only ? oracle::enumerate_full_orientations(g, caps) : oracle::enumerate_partial_orientations(g, caps);
  PartialOrientation o(g);
  while (stream.next(o))
    if (!f(o)) return;
}

}  // namespace

Report rr(const Multigraph& g, const Caps& caps, Box box) {
  Report r{"rr"};
  oracle::BruteRank brute(g, caps);
  RankSolver solver(g);
  const Divisor k = canonical_divisor(g);
  const Int genus_g = genus(g);
  for_each_in_box(g.num_vertices(), box, [&](const Divisor& d) {
    const Int rd = brute.rank(d), rk = brute.rank(k - d);
    ++r.checked;
    if (rd - rk != d.degree() - genus_g + 1)
      r.fail(where(g) + "D = " + show(g, d) + ": r(D) = " + std::to_string(rd) + ", r(K-D) = " + std::to_string(rk));
    else if (Int p = solver.rank_value(d); p != rd)
      r.fail(where(g) + "D = " + show(g, d) + ": rank " + std::to_string(p) + ", oracle " + std::to_string(rd));
    return r.passed;
  });
  return r;
}

Report gioan(const Multigraph& g, const Caps& caps) {
  Report r{"gioan"};
  auto table = oracle::class_table_full(g, caps);
  const Int trees = spanning_tree_count(g);
  ++r.checked;
  if (static_cast<Int>(table.classes.size()) != trees) {
    r.fail(where(g) + std::to_string(table.classes.size()) + " classes, " + std::to_string(trees) + " spanning trees");
    return r;
  }
  for (std::size_t i = 0; i < table.classes.size() && r.passed; ++i) {
    const auto& members = table.classes[i].members;
    for (const auto& o : members) {
      ++r.checked;
      if (!equivalent(o, members.front())) {
        r.fail(where(g) + show(o) + " not equivalent to " + show(members.front()) + " of the same class");
        break;
      }
    }
    for (std::size_t j = i + 1; j < table.classes.size() && r.passed; ++j) {
      ++r.checked;
      if (equivalent(members.front(), table.classes[j].members.front()))
        r.fail(where(g) + show(members.front()) + " equivalent to " + show(table.classes[j].members.front()) +
               " of another class");
    }
  }
  return r;
}

Report dichotomy(const Multigraph& g, const Caps& caps) {
  Report r{"dichotomy"};
  oracle::BruteRank brute(g, caps);
  std::map<std::vector<Int>, std::pair<bool, bool>> kinds;  // class -> (acyclic seen, sourceless seen)
  for_each_orientation(g, false, caps, [&](const PartialOrientation& o) {
    ++r.checked;
    const Divisor d = o.divisor();
    const Int rank = brute.rank(d);
    auto u = unfurl(o);
    const bool ok = u.outcome == Outcome::Acyclic ? rank == -1 && oracle::acyclic(u.orientation)
                    : u.outcome == Outcome::Sourceless ? rank >= 0 && u.orientation.divisor().is_effective()
                                                       : false;
    if (!ok) {
      r.fail(where(g) + show(o) + ": unfurl " + std::string(to_string(u.outcome)) + ", oracle rank " +
             std::to_string(rank));
      return false;
    }
    auto& seen = kinds[brute.keyer().key(d)];
    seen.first = seen.first || oracle::acyclic(o);
    seen.second = seen.second || d.is_effective();
    if (seen.first && seen.second) {
      r.fail(where(g) + "class of " + show(o) + " holds acyclic and sourceless orientations");
      return false;
    }
    return true;
  });
  return r;
}

Report rank_distance(const Multigraph& g, const Caps& caps) {
  Report r{"rank-distance"};
  RankSolver solver(g);
  std::vector<std::optional<oracle::PathReversalDistances>> tables(g.num_edges() + 1);
  for_each_orientation(g, false, caps, [&](const PartialOrientation& o) {
    ++r.checked;
    auto& table = tables[o.num_oriented()];
    if (!table) table.emplace(g, o.num_oriented(), caps);
    const Int dist = table->distance(o);
    auto res = rank_via_path_reversals(o, &solver);
    std::string problem;
    if (res.rank != dist - 1)
      problem = "rank " + std::to_string(res.rank) + ", distance " + std::to_string(dist);
    else if (res.path_reversals != static_cast<std::size_t>(res.rank + 1))
      problem = std::to_string(res.path_reversals) + " path reversals for rank " + std::to_string(res.rank);
    else {
      try {
        if (!oracle::acyclic(replay(res.certificate, o))) problem = "certificate ends in a cyclic orientation";
      } catch (const Error& e) {
        problem = std::string("certificate does not replay: ") + e.what();
      }
    }
    if (!problem.empty()) r.fail(where(g) + show(o) + ": " + problem);
    return r.passed;
  });
  return r;
}

Report eulerpar(const Multigraph& g, const Caps& caps, Box box) {
  Report r{"eulerpar"};
  const std::size_t n = g.num_vertices();
  const Int target = genus(g) - 1;
  for_each_in_box(n, box, [&](const Divisor& d) {
    if (d.degree() != target) return true;
    ++r.checked;
    const bool enumerated = oracle::orientable_by_enumeration(g, d, caps);
    const bool chi = oracle::chi_min(g, d, caps).chi >= 0;
    const bool flow = is_orientable(g, d, caps);
    if (enumerated != chi || enumerated != flow)
      r.fail(where(g) + "D = " + show(g, d) + ": enumeration " + std::to_string(enumerated) + ", chi " +
             std::to_string(chi) + ", flow " + std::to_string(flow));
    return r.passed;
  });
  if (!r.passed) return r;

  std::set<std::vector<Int>> image;
  for_each_orientation(g, false, caps, [&](const PartialOrientation& o) {
    image.insert(o.divisor().values());
    return true;
  });
  for (const auto& v : image) {
    ++r.checked;
    Divisor d(v);
    bool bounded = true;
    for (Int x : v) bounded = bounded && x >= -1;
    if (!bounded || oracle::chi_min(g, d, caps).chi_bar < 0) {
      r.fail(where(g) + "D_O = " + show(g, d) + " violates D >= -1 or chi_bar >= 0");
      return r;
    }
  }
  // Outside this box chi_bar({v}) = deg(v) - 1 - D(v) < 0 or D(v) < -1.
  std::vector<Int> lo(n, -1), hi(n);
  for (VertexId v = 0; v < n; ++v) hi[v] = g.degree(v) - 1;
  for_each_in_box(n, lo, hi, [&](const Divisor& d) {
    ++r.checked;
    const bool in_image = image.count(d.values()) > 0;
    const bool chi_bar = oracle::chi_min(g, d, caps).chi_bar >= 0;
    const bool production = is_partially_orientable(g, d, caps);
    if (in_image != chi_bar || in_image != production)
      r.fail(where(g) + "D = " + show(g, d) + ": image " + std::to_string(in_image) + ", chi_bar " +
             std::to_string(chi_bar) + ", is_partially_orientable " + std::to_string(production));
    return r.passed;
  });
  return r;
}

Report break_divisors(const Multigraph& g, const Caps& caps, Box box) {
  Report r{"break"};
  (void)caps;
  oracle::ClassKeyer keyer(g);
  const std::size_t n = g.num_vertices();
  std::map<std::vector<Int>, Divisor> by_class;
  std::set<std::vector<Int>> image;
  for_each_in_box(n, box, [&](const Divisor& d) {
    if (d.degree() != genus(g)) return true;
    ++r.checked;
    const Divisor b = break_divisor(g, d);
    std::string problem;
    if (!keyer.equivalent(b, d)) problem = "result " + show(g, b) + " not equivalent";
    else if (break_divisor(g, b) != b) problem = "not idempotent on " + show(g, b);
    for (VertexId q = 0; q < n && problem.empty(); ++q)
      if (break_divisor(g, d, q) != b) problem = "depends on the base vertex " + g.name(q);
    auto [it, fresh] = by_class.try_emplace(keyer.key(d), b);
    if (problem.empty() && it->second != b) problem = "differs from " + show(g, it->second) + " on the same class";
    if (!problem.empty()) r.fail(where(g) + "D = " + show(g, d) + ": " + problem);
    image.insert(b.values());
    return r.passed;
  });
  if (r.passed && (static_cast<Int>(image.size()) != spanning_tree_count(g) || image.size() != by_class.size()))
    r.fail(where(g) + std::to_string(image.size()) + " break divisors over " + std::to_string(by_class.size()) +
           " classes, " + std::to_string(spanning_tree_count(g)) + " spanning trees");
  return r;
}

Report torsor(const Multigraph& g, const Caps& caps) {
  Report r{"torsor"};
  auto table = oracle::class_table_full(g, caps);
  oracle::ClassKeyer keyer(g);
  const auto pic = oracle::picard_zero(g);
  if (pic.size() != table.classes.size()) {
    r.fail(where(g) + std::to_string(pic.size()) + " degree-0 classes, " + std::to_string(table.classes.size()) +
           " orientation classes");
    return r;
  }
  for (const auto& cls : table.classes) {
    std::set<std::vector<Int>> targets;
    for (const auto& z : pic) {
      const auto expected = keyer.key(cls.representative + z);
      for (const auto& o : cls.members) {
        ++r.checked;
        auto res = torsor_act(o, z);
        if (!res.orientation.is_full() || keyer.key(res.orientation.divisor()) != expected) {
          r.fail(where(g) + show(o) + " acted on by " + show(g, z) + " lands in the wrong class");
          return r;
        }
      }
      targets.insert(expected);
    }
    if (targets.size() != table.classes.size()) {
      r.fail(where(g) + "action on the class of " + show(cls.members.front()) + " reaches " +
             std::to_string(targets.size()) + " of " + std::to_string(table.classes.size()) + " classes");
      return r;
    }
  }
  return r;
}

Report realizability(const Multigraph& g, const Caps& caps, Box box) {
  Report r{"realizability"};
  oracle::BruteRank brute(g, caps);
  const std::size_t n = g.num_vertices();
  for_each_in_box(n, box, [&](const Divisor& d) {
    if (d.degree() > genus(g) - 1) return true;
    ++r.checked;
    auto c = construct_orientation(g, d);
    const bool expected = brute.rank(d + ones(g)) >= 0;
    if (c.realized != expected || (c.realized && !brute.keyer().equivalent(c.orientation.divisor(), d))) {
      r.fail(where(g) + "D = " + show(g, d) + ": construct realized " + std::to_string(c.realized) +
             ", r(D + 1) >= 0 is " + std::to_string(expected));
      return false;
    }
    for (VertexId q = 0; q < n; ++q) {
      ++r.checked;
      auto qc = q_connected_orientation(g, d, q);
      const bool want = brute.rank(d + Divisor::unit(n, q)) >= 0;
      bool ok = qc.has_value() == want;
      if (ok && qc)
        ok = reachable(qc->orientation, VertexSet::single(n, q)).is_full() &&
             brute.keyer().equivalent(qc->orientation.divisor(), d);
      if (!ok) {
        r.fail(where(g) + "D = " + show(g, d) + ", q = " + g.name(q) + ": q-connected found " +
               std::to_string(qc.has_value()) + ", r(D + (q)) >= 0 is " + std::to_string(want));
        return false;
      }
    }
    return true;
  });
  return r;
}

namespace {

Int brute_min_cut(const FlowNetwork& net) {
  Int best = INT64_MAX;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << net.num_vertices()); ++mask) {
    if (!(mask >> net.source & 1) || (mask >> net.sink & 1)) continue;
    Int c = 0;
    for (const Arc& a : net.arcs)
      if ((mask >> a.from & 1) && !(mask >> a.to & 1)) c += a.capacity;
    best = std::min(best, c);
  }
  return best;
}

std::string show(const FlowNetwork& net) {
  std::string s = "network [";
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    s += (i ? ", " : "") + net.names[net.arcs[i].from] + "->" + net.names[net.arcs[i].to] + ":" +
         std::to_string(net.arcs[i].capacity);
  return s + "] s=" + net.names[net.source] + " t=" + net.names[net.sink];
}

}  // namespace

Report mfmc(std::uint64_t seed, std::size_t count, std::size_t max_vertices, Int max_capacity) {
  Report r{"mfmc"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count && r.passed; ++i) {
    const bool unit = i % 2 == 1;
    FlowNetwork net;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
    for (std::size_t v = 0; v < n; ++v) net.names.push_back("v" + std::to_string(v));
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 3 * n)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<Int> cap(0, max_capacity);
    for (std::size_t k = 0; k < m; ++k) {
      VertexId a = pick(rng), b = pick(rng);
      if (a != b) net.arcs.push_back({a, b, unit ? 1 : cap(rng)});
    }
    net.source = 0;
    net.sink = n - 1;
    ++r.checked;
    const Int flow = max_flow(net).value;
    const Int cut = brute_min_cut(net);
    const Int via_orientations = mfmc_via_orientability(net).value;
    if (flow != cut || flow != via_orientations)
      r.fail(show(net) + ": max_flow " + std::to_string(flow) + ", min cut " + std::to_string(cut) +
             ", via orientability " + std::to_string(via_orientations));
  }
  return r;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"rr",     "gioan", "dichotomy", "rank-distance",
                                            "eulerpar", "break", "torsor",    "realizability"};
  return all;
}

Report run(const std::string& name, const Multigraph& g, const Caps& caps) {
  if (name == "rr") return rr(g, caps, Box{-2, 2});
  if (name == "gioan") return gioan(g, caps);
  if (name == "dichotomy") return dichotomy(g, caps);
  if (name == "rank-distance") return rank_distance(g, caps);
  if (name == "eulerpar") return eulerpar(g, caps);
  if (name == "break") return break_divisors(g, caps);
  if (name == "torsor") return torsor(g, caps);
  if (name == "realizability") return realizability(g, caps);
  throw Error(ErrorCode::UsageError, "unknown suite '" + name + "'");
}

}  // namespace orr::suites
