#pragma once

#include <cstddef>
#include <optional>
#include <stop_token>

#include "orr/moves.hpp"
#include "orr/rank.hpp"

namespace orr {

/// Cooperative limits for the iterative algorithms. A round is one cut
/// reversal or one construction step. max_rounds = 0 means unlimited.
struct RunLimits {
  std::size_t max_rounds = 0;
  std::stop_token stop;
};

enum class Outcome { Acyclic, Sourceless, CycleLocked, EdgeIntoS };

std::string_view to_string(Outcome o) noexcept;

struct DichotomyResult {
  Outcome outcome = Outcome::Acyclic;
  VertexSet locked;                   // X for CycleLocked
  PartialOrientation orientation;
  MoveCertificate certificate;
  std::optional<EdgeId> edge_into_s;  // set for EdgeIntoS
};

/// Grows X from the sources by edge pivots. Acyclic if X reaches V;
/// otherwise CycleLocked(X): (X, X^c) is saturated toward X^c and G[X^c]
/// is sourceless, so every pivot-equivalent orientation has a cycle.
/// A sourceless input gives CycleLocked with X empty.
DichotomyResult oriented_dhar(const PartialOrientation& o);

/// Alternates oriented Dhar with reversal of the locked cut until the
/// orientation is Acyclic or Sourceless.
DichotomyResult unfurl(const PartialOrientation& o, const RunLimits& limits = {});

/// `s` must be a nonempty set of sources with G[s] connected. Ends with
/// EdgeIntoS (some edge now points into s) or Acyclic.
DichotomyResult modified_unfurl(const PartialOrientation& o, const VertexSet& s, const RunLimits& limits = {});

struct Construction {
  bool realized = false;
  /// Realized: D_O ~ D. Obstructed: acyclic, with obstruction < D_O.
  PartialOrientation orientation;
  Divisor obstruction;  // D' ~ D, only meaningful when !realized
  MoveCertificate certificate;  // from the empty orientation
};

/// Builds a partial orientation whose divisor is equivalent to d, or an
/// acyclic certificate that none exists. DegreeTooHigh if deg d > g - 1.
Construction construct_orientation(const Multigraph& g, const Divisor& d, const RunLimits& limits = {});

struct Normalized {
  PartialOrientation orientation;
  MoveCertificate certificate;
};

/// Requires o full, sourceless, or with q as its only source.
Normalized to_q_connected(const PartialOrientation& o, VertexId q, const RunLimits& limits = {});

/// A q-connected partial orientation with divisor equivalent to d, if one
/// exists (deg d <= g - 1). The certificate starts at the empty orientation.
std::optional<Normalized> q_connected_orientation(const Multigraph& g, const Divisor& d, VertexId q,
                                                  const RunLimits& limits = {});

/// Equivalence in the generalized cycle-cocycle reversal system.
bool equivalent(const PartialOrientation& a, const PartialOrientation& b);

struct PathReversalRank {
  Int rank = -1;
  PartialOrientation orientation;  // final, acyclic
  MoveCertificate certificate;
  std::size_t path_reversals = 0;
};

/// Reaches an acyclic orientation using exactly rank + 1 directed path
/// reversals (plus pivots and cut reversals).
PathReversalRank rank_via_path_reversals(const PartialOrientation& o, RankSolver* solver = nullptr,
                                         const RunLimits& limits = {});

}  // namespace orr
