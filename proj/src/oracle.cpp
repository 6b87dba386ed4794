#include "orr/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace orr::oracle {

namespace {

// Fraction-free Gaussian elimination.
Int determinant(std::vector<std::vector<__int128>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return checked_narrow(sign * m[n - 1][n - 1]);
}

Int floor_mod(__int128 a, Int m) {
  __int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<Int>(r);
}

// Calls f on every nonnegative vector of length n summing to total.
template <class F>
void for_each_composition(std::size_t n, Int total, F&& f) {
  std::vector<Int> v(n, 0);
  auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i + 1 == n) {
      v[i] = left;
      f(v);
      return;
    }
    for (Int x = 0; x <= left; ++x) {
      v[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (n > 0) rec(rec, 0, total);
}

PartialOrientation make_orientation(const Multigraph& g, const std::vector<std::uint8_t>& digits, bool full_only) {
  std::vector<EdgeState> states(digits.size());
  for (std::size_t e = 0; e < digits.size(); ++e)
    states[e] = full_only ? (digits[e] ? EdgeState::TowardSecond : EdgeState::TowardFirst)
                          : static_cast<EdgeState>(digits[e]);
  return PartialOrientation(g, std::move(states));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::TooLarge, what);
}

Divisor indegree_minus_one(const PartialOrientation& o) {
  const Multigraph& g = o.graph();
  Divisor d(g.num_vertices(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (o.state(e) == EdgeState::TowardFirst) ++d[ed.first];
    if (o.state(e) == EdgeState::TowardSecond) ++d[ed.second];
  }
  return d;
}

}  // namespace

ClassKeyer::ClassKeyer(const Multigraph& g) : n_(g.num_vertices()), q_(g.base_vertex()) {
  std::vector<std::vector<__int128>> lap(n_, std::vector<__int128>(n_, 0));
  for (const Edge& e : g.edges()) {
    ++lap[e.first][e.first];
    ++lap[e.second][e.second];
    --lap[e.first][e.second];
    --lap[e.second][e.first];
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n_; ++v)
    if (v != q_) keep.push_back(v);
  const std::size_t m = keep.size();
  std::vector<std::vector<__int128>> red(m, std::vector<__int128>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) red[i][j] = lap[keep[i]][keep[j]];
  det_ = determinant(red);
  ensure(det_ > 0, "oracle: reduced Laplacian is singular");
  adj_.assign(m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      // adj[i][j] = (-1)^(i+j) det(red without row j, column i)
      std::vector<std::vector<__int128>> minor;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == j) continue;
        std::vector<__int128> row;
        for (std::size_t c = 0; c < m; ++c)
          if (c != i) row.push_back(red[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = determinant(std::move(minor));
      adj_[i][j] = (i + j) % 2 ? -cof : cof;
    }
}

std::vector<Int> ClassKeyer::key(const Divisor& d) const {
  ensure(d.size() == n_, "oracle: divisor size mismatch");
  std::vector<Int> k{d.degree()};
  std::vector<Int> b;
  for (std::size_t v = 0; v < n_; ++v)
    if (v != q_) b.push_back(d[v]);
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    __int128 s = 0;
    for (std::size_t j = 0; j < b.size(); ++j) s += static_cast<__int128>(adj_[i][j]) * b[j];
    k.push_back(floor_mod(s, det_));
  }
  return k;
}

PartialOrientationStream::PartialOrientationStream(const Multigraph& g, bool full_only)
    : g_(g), full_only_(full_only), digits_(g.num_edges(), 0) {
  for (std::size_t e = 0; e < g.num_edges(); ++e) total_ *= full_only ? 2 : 3;
}

bool PartialOrientationStream::next(PartialOrientation& out) {
  if (done_) return false;
  out = make_orientation(g_, digits_, full_only_);
  const std::uint8_t base = full_only_ ? 2 : 3;
  std::size_t i = digits_.size();
  while (i > 0 && ++digits_[i - 1] == base) digits_[--i] = 0;
  if (i == 0) done_ = true;
  return true;
}

void PartialOrientationStream::reset() {
  std::fill(digits_.begin(), digits_.end(), 0);
  done_ = false;
}

PartialOrientationStream enumerate_partial_orientations(const Multigraph& g, const Caps& caps) {
  require(g.num_edges() <= caps.partial_edges, "too many edges to enumerate partial orientations");
  return PartialOrientationStream(g, false);
}

PartialOrientationStream enumerate_full_orientations(const Multigraph& g, const Caps& caps) {
  require(g.num_edges() <= caps.full_edges, "too many edges to enumerate full orientations");
  return PartialOrientationStream(g, true);
}

namespace {

ClassTable bucket(const Multigraph& g, PartialOrientationStream stream, std::optional<std::size_t> oriented) {
  ClassKeyer keyer(g);
  ClassTable table;
  std::map<std::vector<Int>, std::size_t> index;
  PartialOrientation o(g);
  while (stream.next(o)) {
    if (oriented && o.num_oriented() != *oriented) continue;
    ++table.orientations;
    Divisor d = indegree_minus_one(o);
    auto [it, fresh] = index.emplace(keyer.key(d), table.classes.size());
    if (fresh) table.classes.push_back({d, {}});
    auto& cls = table.classes[it->second];
    if (d.values() < cls.representative.values()) cls.representative = d;
    cls.members.push_back(o);
  }
  return table;
}

}  // namespace

ClassTable class_table_full(const Multigraph& g, const Caps& caps) {
  return bucket(g, enumerate_full_orientations(g, caps), std::nullopt);
}

ClassTable class_table_partial(const Multigraph& g, std::size_t oriented_edges, const Caps& caps) {
  return bucket(g, enumerate_partial_orientations(g, caps), oriented_edges);
}

BruteRank::BruteRank(const Multigraph& g, const Caps& caps) : g_(g), caps_(caps), keyer_(g) {
  require(g.num_vertices() <= caps.rank_vertices, "too many vertices for brute-force rank");
}

bool BruteRank::effective_class(const Divisor& d) {
  const Int deg = d.degree();
  if (deg < 0) return false;
  auto [it, fresh] = effective_keys_.try_emplace(deg);
  if (fresh)
    for_each_composition(g_.num_vertices(), deg,
                         [&](const std::vector<Int>& v) { it->second.insert(keyer_.key(Divisor(v))); });
  return it->second.count(keyer_.key(d)) > 0;
}

Int BruteRank::rank(const Divisor& d) {
  check_divisor(g_, d);
  const Int deg = d.degree();
  require(deg <= caps_.rank_degree && deg >= -caps_.rank_degree, "divisor degree too large for brute-force rank");
  if (deg < 0) return -1;
  auto key = keyer_.key(d);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Int r = deg;
  for (Int k = 0; k <= deg + 1; ++k) {
    bool losing = false;
    for_each_composition(g_.num_vertices(), k, [&](const std::vector<Int>& e) {
      if (!losing && !effective_class(d - Divisor(e))) losing = true;
    });
    if (losing) {
      r = k - 1;
      break;
    }
  }
  memo_.emplace(std::move(key), r);
  return r;
}

Int brute_rank(const Multigraph& g, const Divisor& d, const Caps& caps) { return BruteRank(g, caps).rank(d); }

bool acyclic(const PartialOrientation& o) {
  const Multigraph& g = o.graph();
  std::vector<Int> indeg(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (o.is_oriented(e)) ++indeg[o.head(e)];
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (EdgeId e : g.incident_edges(v))
      if (o.is_oriented(e) && o.tail(e) == v && --indeg[o.head(e)] == 0) ready.push_back(o.head(e));
  }
  return removed == g.num_vertices();
}

namespace {

// Every orientation obtained from o by reversing one directed simple path.
template <class F>
void for_each_path_reversal(const PartialOrientation& o, F&& f) {
  const Multigraph& g = o.graph();
  std::vector<bool> on_path(g.num_vertices(), false);
  std::vector<EdgeId> path;
  auto extend = [&](auto&& self, VertexId v) -> void {
    for (EdgeId e : g.incident_edges(v)) {
      if (!o.is_oriented(e) || o.tail(e) != v || on_path[o.head(e)]) continue;
      VertexId w = o.head(e);
      path.push_back(e);
      on_path[w] = true;
      PartialOrientation r = o;
      for (EdgeId p : path) r.orient(p, r.tail(p));
      f(r);
      self(self, w);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    on_path[v] = true;
    extend(extend, v);
    on_path[v] = false;
  }
}

}  // namespace

PathReversalDistances::PathReversalDistances(const Multigraph& g, std::size_t oriented_edges, const Caps& caps)
    : keyer_(g), oriented_(oriented_edges) {
  require(g.num_edges() <= caps.distance_edges, "too many edges for path-reversal distances");
  std::map<std::vector<Int>, std::set<std::vector<Int>>> arcs;
  std::set<std::vector<Int>> acyclic_classes;
  PartialOrientationStream stream(g, false);
  PartialOrientation o(g);
  while (stream.next(o)) {
    if (o.num_oriented() != oriented_edges) continue;
    auto k = keyer_.key(indegree_minus_one(o));
    if (acyclic(o)) acyclic_classes.insert(k);
    auto& out = arcs[k];
    for_each_path_reversal(o, [&](const PartialOrientation& r) { out.insert(keyer_.key(indegree_minus_one(r))); });
  }
  std::deque<std::vector<Int>> queue;
  for (const auto& k : acyclic_classes) {
    dist_[k] = 0;
    queue.push_back(k);
  }
  // Path reversal is symmetric (reverse the reversed path), so arcs can be
  // followed backwards from the acyclic classes.
  while (!queue.empty()) {
    auto k = queue.front();
    queue.pop_front();
    for (const auto& next : arcs[k]) {
      if (dist_.count(next)) continue;
      dist_[next] = dist_[k] + 1;
      queue.push_back(next);
    }
  }
}

Int PathReversalDistances::distance(const PartialOrientation& o) const {
  ensure(o.num_oriented() == oriented_, "oracle: orientation has the wrong number of oriented edges");
  auto it = dist_.find(keyer_.key(indegree_minus_one(o)));
  ensure(it != dist_.end(), "oracle: class unreachable from the acyclic classes");
  return it->second;
}

Int path_reversal_distance(const Multigraph& g, const PartialOrientation& o, const Caps& caps) {
  return PathReversalDistances(g, o.num_oriented(), caps).distance(o);
}

ChiMin chi_min(const Multigraph& g, const Divisor& d, const Caps& caps) {
  const std::size_t n = g.num_vertices();
  require(n <= caps.chi_vertices && n < 63, "too many vertices for subset enumeration");
  const Int m = static_cast<Int>(g.num_edges());
  ChiMin best{INT64_MAX, INT64_MAX};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Int size = 0, weight = 0, inside = 0, outside = 0;
    for (VertexId v = 0; v < n; ++v)
      if (mask >> v & 1) {
        ++size;
        weight += d[v];
      }
    for (const Edge& e : g.edges()) {
      const bool a = mask >> e.first & 1, b = mask >> e.second & 1;
      if (a && b) ++inside;
      if (!a && !b) ++outside;
    }
    best.chi = std::min(best.chi, weight + size - inside);
    best.chi_bar = std::min(best.chi_bar, m - outside - size - weight);
  }
  return best;
}

bool orientable_by_enumeration(const Multigraph& g, const Divisor& d, const Caps& caps) {
  auto stream = enumerate_full_orientations(g, caps);
  PartialOrientation o(g);
  while (stream.next(o))
    if (indegree_minus_one(o) == d) return true;
  return false;
}

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

EdgeList canonical(std::size_t n, const EdgeList& edges) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  do {
    EdgeList mapped;
    for (auto [a, b] : edges) mapped.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Multigraph> enumerate_connected_multigraphs(std::size_t max_edges) {
  // Every connected multigraph with m edges is one with m - 1 edges plus an
  // edge: drop a non-bridge edge, or a leaf edge if all are bridges.
  std::set<std::pair<std::size_t, EdgeList>> level{{2, {{0, 1}}}};
  std::vector<Multigraph> out;
  for (std::size_t m = 1; m <= max_edges; ++m) {
    for (const auto& [n, edges] : level) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
      std::vector<Edge> es;
      for (auto [a, b] : edges) es.push_back({a, b});
      out.emplace_back(std::move(names), std::move(es));
    }
    if (m == max_edges) break;
    std::set<std::pair<std::size_t, EdgeList>> next;
    for (const auto& [n, edges] : level) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          EdgeList e = edges;
          e.emplace_back(a, b);
          next.emplace(n, canonical(n, e));
        }
        EdgeList e = edges;
        e.emplace_back(a, n);
        next.emplace(n + 1, canonical(n + 1, e));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Divisor> picard_zero(const Multigraph& g) {
  ClassKeyer keyer(g);
  const std::size_t n = g.num_vertices();
  std::map<std::vector<Int>, Divisor> found;
  for (Int r = 0; static_cast<Int>(found.size()) < keyer.order(); ++r) {
    ensure(r <= 2 * static_cast<Int>(g.num_edges()) + 2, "oracle: degree-0 classes not found in the box");
    std::vector<Int> v(n, -r);
    for (;;) {
      Divisor d(v);
      if (d.degree() == 0) found.try_emplace(keyer.key(d), d);
      std::size_t i = 0;
      while (i < n && ++v[i] > r) v[i++] = -r;
      if (i == n) break;
    }
  }
  std::vector<Divisor> reps;
  for (auto& [k, d] : found) reps.push_back(d);
  return reps;
}

}  // namespace orr::oracle
