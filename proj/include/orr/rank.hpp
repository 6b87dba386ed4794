#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "orr/reduce.hpp"

namespace orr {

struct RankOptions {
  /// Also list every degree-`rank` removal together with the effective
  /// divisor equivalent to D - E. Exponential in rank; off by default.
  bool collect_witnesses = false;
  /// Maximum number of distinct reduced forms explored; 0 = unlimited.
  std::size_t max_states = 0;
};

struct WinningRemoval {
  Divisor removed;    // E >= 0, deg E = rank
  Divisor effective;  // effective divisor equivalent to D - E
};

struct RankCertificate {
  Int rank = -1;
  std::vector<WinningRemoval> winning_removals;
  /// E >= 0 with deg E = rank + 1 and no effective divisor equivalent to
  /// D - E. Empty removal (all zeros) when rank = -1.
  Divisor losing_removal;
  /// Reduced form of D - losing_removal; negative at q.
  Divisor losing_reduced;
  VertexId q = 0;
};

/// Rank search by single-chip removals, memoized on q-reduced forms.
/// The memo persists across calls on the same graph; calls are serialized.
class RankSolver {
 public:
  explicit RankSolver(Multigraph g);
  RankSolver(Multigraph g, VertexId q);

  const Multigraph& graph() const noexcept { return g_; }
  VertexId base() const noexcept { return q_; }

  RankCertificate rank(const Divisor& d, const RankOptions& opts = {});
  Int rank_value(const Divisor& d);

 private:
  struct Entry {
    Int rank;
    VertexId argmin;  // meaningful when rank >= 0
  };
  Int search(const Divisor& reduced, std::size_t max_states);
  const Entry& lookup(const Divisor& reduced) const;

  Multigraph g_;
  VertexId q_;
  std::map<std::vector<Int>, Entry> memo_;
  std::mutex mu_;
};

/// One-shot rank with a fresh memo.
RankCertificate rank(const Multigraph& g, const Divisor& d, const RankOptions& opts = {});

/// Checks a certificate against the definition using reduce only.
bool check_rank_certificate(const Multigraph& g, const Divisor& d, const RankCertificate& cert);

struct RRReport {
  Int rank = -1;
  Int rank_complement = -1;  // r(K - D)
  Int degree = 0;
  Int genus = 0;
  Divisor complement;        // K - D
};

/// Computes r(D) and r(K - D) and checks r(D) - r(K-D) = deg D - g + 1.
/// Throws RRViolation if the identity fails.
RRReport rr_verify(const Multigraph& g, const Divisor& d);
RRReport rr_verify(RankSolver& solver, const Divisor& d);

}  // namespace orr
