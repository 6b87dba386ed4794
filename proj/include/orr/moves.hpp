#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orr/orientation.hpp"

namespace orr {

/// Unorient `in_edge` (pointing to `vertex`) and orient the unoriented
/// `un_edge` toward `vertex`. Preserves D_O.
struct EdgePivot {
  EdgeId in_edge;
  EdgeId un_edge;
  VertexId vertex;
  friend bool operator==(const EdgePivot&, const EdgePivot&) = default;
};

/// Reverse a consistently oriented simple cycle, edges listed in order.
struct CycleReversal {
  std::vector<EdgeId> edges;
  friend bool operator==(const CycleReversal&, const CycleReversal&) = default;
};

/// Reverse the cut (S, S^c); every cut edge must be oriented, all the same way.
/// Cut toward S: D' = D - Δχ_S. Cut away from S: D' = D + Δχ_S.
struct CutReversal {
  VertexSet side;
  friend bool operator==(const CutReversal&, const CutReversal&) = default;
};

/// Reverse a directed simple path u -> ... -> v: D' = D + (u) - (v).
struct PathReversal {
  std::vector<EdgeId> edges;
  friend bool operator==(const PathReversal&, const PathReversal&) = default;
};

/// Pivot cascade along the directed path ending at v, where `terminal_edge`
/// is unoriented and touches v: terminal edge ends up toward v, path edges
/// after the first are reversed, the first path edge becomes unoriented.
struct JacobsLadder {
  std::vector<EdgeId> path;
  EdgeId terminal_edge;
  friend bool operator==(const JacobsLadder&, const JacobsLadder&) = default;
};

struct UnorientEdge {
  EdgeId edge;
  friend bool operator==(const UnorientEdge&, const UnorientEdge&) = default;
};

struct OrientEdge {
  EdgeId edge;
  VertexId head;
  friend bool operator==(const OrientEdge&, const OrientEdge&) = default;
};

using Move = std::variant<EdgePivot, CycleReversal, CutReversal, PathReversal, JacobsLadder, UnorientEdge, OrientEdge>;

std::string move_kind(const Move& m);

/// Applies m in place after checking its preconditions (PreconditionViolated).
void apply_move_inplace(PartialOrientation& o, const Move& m);
PartialOrientation apply_move(const PartialOrientation& o, const Move& m);

/// The vertex path (u, ..., v) traced by a directed edge path; checks
/// consistency and simplicity.
std::vector<VertexId> directed_path_vertices(const PartialOrientation& o, const std::vector<EdgeId>& edges);

struct MoveCertificate {
  std::uint64_t initial = 0;
  std::vector<Move> moves;
  std::uint64_t final = 0;
};

/// Replays with full checking; FingerprintMismatch on either end,
/// PreconditionViolated (naming the step) on a bad move.
PartialOrientation replay(const MoveCertificate& cert, const PartialOrientation& o);

/// Applies moves one at a time, keeping the certificate in sync.
class CertificateRecorder {
 public:
  explicit CertificateRecorder(PartialOrientation start);

  const PartialOrientation& current() const noexcept { return current_; }
  void apply(const Move& m);
  void append(const MoveCertificate& cert);
  std::size_t size() const noexcept { return moves_.size(); }
  MoveCertificate certificate() const;

 private:
  std::uint64_t initial_;
  PartialOrientation current_;
  std::vector<Move> moves_;
};

}  // namespace orr
