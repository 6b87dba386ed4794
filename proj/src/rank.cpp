#include "orr/rank.hpp"

#include <functional>
#include <limits>

namespace orr {

RankSolver::RankSolver(Multigraph g) : g_(std::move(g)), q_(g_.base_vertex()) {}

RankSolver::RankSolver(Multigraph g, VertexId q) : g_(std::move(g)), q_(q) {
  if (q_ >= g_.num_vertices()) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
}

const RankSolver::Entry& RankSolver::lookup(const Divisor& reduced) const {
  auto it = memo_.find(reduced.values());
  ensure(it != memo_.end(), "rank memo miss");
  return it->second;
}

Int RankSolver::search(const Divisor& reduced, std::size_t max_states) {
  if (auto it = memo_.find(reduced.values()); it != memo_.end()) return it->second.rank;
  if (max_states != 0 && memo_.size() >= max_states)
    throw Error(ErrorCode::BudgetExceeded, "rank search exceeded " + std::to_string(max_states) + " states");
  const std::size_t n = g_.num_vertices();
  if (reduced[q_] < 0) {
    memo_.emplace(reduced.values(), Entry{-1, n});
    return -1;
  }
  Int best = std::numeric_limits<Int>::max();
  VertexId arg = n;
  for (VertexId v : g_.lex_order()) {
    Divisor child = reduced;
    child[v] = checked_sub(child[v], 1);
    Int r = search(reduce(g_, child, q_).divisor, max_states);
    if (r < best) {
      best = r;
      arg = v;
    }
    if (best == -1) break;
  }
  memo_.emplace(reduced.values(), Entry{best + 1, arg});
  return best + 1;
}

RankCertificate RankSolver::rank(const Divisor& d, const RankOptions& opts) {
  check_divisor(g_, d);
  std::lock_guard lock(mu_);
  const std::size_t n = g_.num_vertices();
  RankCertificate cert;
  cert.q = q_;

  Divisor cur = reduce(g_, d, q_).divisor;
  cert.rank = search(cur, opts.max_states);

  const Int deg = d.degree();
  const Int g = genus(g_);
  ensure(cert.rank >= std::max<Int>(-1, deg - g), "rank below the Riemann bound");
  if (deg >= 0) ensure(cert.rank <= deg, "rank exceeds degree");
  if (deg < 0) ensure(cert.rank == -1, "negative degree with nonnegative rank");

  cert.losing_removal = Divisor(n);
  while (lookup(cur).rank >= 0) {
    VertexId v = lookup(cur).argmin;
    ++cert.losing_removal[v];
    --cur[v];
    cur = reduce(g_, cur, q_).divisor;
  }
  cert.losing_reduced = cur;
  ensure(cert.losing_removal.degree() == cert.rank + 1, "losing chain length mismatch");

  if (opts.collect_witnesses && cert.rank >= 0) {
    Divisor e(n);
    const auto& order = g_.lex_order();
    // All multisets of `rank` vertices, nondecreasing in lex position.
    std::function<void(std::size_t, Int)> rec = [&](std::size_t from, Int left) {
      if (left == 0) {
        Divisor eff = reduce(g_, d - e, q_).divisor;
        ensure(eff.is_effective(), "removal of degree rank is not winnable");
        cert.winning_removals.push_back({e, std::move(eff)});
        return;
      }
      for (std::size_t i = from; i < order.size(); ++i) {
        ++e[order[i]];
        rec(i, left - 1);
        --e[order[i]];
      }
    };
    rec(0, cert.rank);
  }
  return cert;
}

Int RankSolver::rank_value(const Divisor& d) { return rank(d).rank; }

RankCertificate rank(const Multigraph& g, const Divisor& d, const RankOptions& opts) {
  RankSolver solver(g);
  return solver.rank(d, opts);
}

bool check_rank_certificate(const Multigraph& g, const Divisor& d, const RankCertificate& cert) {
  check_divisor(g, d);
  const std::size_t n = g.num_vertices();
  if (cert.losing_removal.size() != n || !cert.losing_removal.is_effective()) return false;
  if (cert.losing_removal.degree() != cert.rank + 1) return false;
  ReducedForm lost = reduce(g, d - cert.losing_removal, cert.q);
  if (lost.divisor[cert.q] >= 0 || lost.divisor != cert.losing_reduced) return false;
  for (const auto& w : cert.winning_removals) {
    if (!w.removed.is_effective() || w.removed.degree() != cert.rank) return false;
    if (!w.effective.is_effective() || !linearly_equivalent(g, d - w.removed, w.effective)) return false;
  }
  return true;
}

RRReport rr_verify(RankSolver& solver, const Divisor& d) {
  const Multigraph& g = solver.graph();
  RRReport r;
  r.degree = d.degree();
  r.genus = genus(g);
  r.complement = canonical_divisor(g) - d;
  r.rank = solver.rank_value(d);
  r.rank_complement = solver.rank_value(r.complement);
  if (r.rank - r.rank_complement != r.degree - r.genus + 1)
    throw Error(ErrorCode::RRViolation, "r(D) - r(K-D) = " + std::to_string(r.rank - r.rank_complement) +
                                            " but deg(D) - g + 1 = " + std::to_string(r.degree - r.genus + 1));
  return r;
}

RRReport rr_verify(const Multigraph& g, const Divisor& d) {
  RankSolver solver(g);
  return rr_verify(solver, d);
}

}  // namespace orr
