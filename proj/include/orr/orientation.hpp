#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orr/divisor.hpp"

namespace orr {

enum class EdgeState : std::uint8_t { Unoriented, TowardFirst, TowardSecond };

/// Per-edge orientation state over a fixed multigraph. Value type: copies
/// are independent, mutation never affects other copies.
class PartialOrientation {
 public:
  /// Every edge unoriented.
  explicit PartialOrientation(Multigraph g);
  PartialOrientation(Multigraph g, std::vector<EdgeState> states);

  const Multigraph& graph() const noexcept { return g_; }
  std::size_t num_edges() const noexcept { return states_.size(); }
  EdgeState state(EdgeId e) const { return states_.at(e); }
  std::span<const EdgeState> states() const noexcept { return states_; }

  bool is_oriented(EdgeId e) const { return state(e) != EdgeState::Unoriented; }
  /// Head/tail of an oriented edge; PreconditionViolated if unoriented.
  VertexId head(EdgeId e) const;
  VertexId tail(EdgeId e) const;
  bool points_to(EdgeId e, VertexId v) const { return is_oriented(e) && head(e) == v; }

  void orient(EdgeId e, VertexId head);
  void unorient(EdgeId e);
  void reverse(EdgeId e);

  Int indegree(VertexId v) const;
  /// D_O(v) = indeg(v) - 1.
  Divisor divisor() const;
  VertexSet sources() const;
  std::size_t num_oriented() const;
  bool is_full() const { return num_oriented() == num_edges(); }

  std::uint64_t fingerprint() const;

  friend bool operator==(const PartialOrientation& a, const PartialOrientation& b) {
    return a.g_.same_as(b.g_) && a.states_ == b.states_;
  }

 private:
  Multigraph g_;
  std::vector<EdgeState> states_;
};

inline Divisor indegree_divisor(const PartialOrientation& o) { return o.divisor(); }

/// Forward closure of x along oriented edges.
VertexSet reachable(const PartialOrientation& o, const VertexSet& x);
bool is_acyclic(const PartialOrientation& o);
/// Some directed cycle as an edge list, empty if acyclic.
std::vector<EdgeId> find_directed_cycle(const PartialOrientation& o);

struct Classification {
  bool acyclic = false;
  bool sourceless = false;
  bool full = false;
  bool q_connected = false;
  VertexId q = 0;
};

Classification classify(const PartialOrientation& o, VertexId q);
inline Classification classify(const PartialOrientation& o) { return classify(o, o.graph().base_vertex()); }

/// Shortest directed path from `from` to `to` (edge ids, ties broken by
/// vertex then edge id). Empty when from == to or no path exists.
std::vector<EdgeId> shortest_directed_path(const PartialOrientation& o, VertexId from, VertexId to);

/// Orientation where each edge points to the endpoint with the larger id.
PartialOrientation base_orientation(const Multigraph& g);

/// "edgeIndex >" (toward second endpoint), "edgeIndex <" (toward first),
/// "edgeIndex -" (unoriented); omitted edges are unoriented.
PartialOrientation parse_orientation(const Multigraph& g, std::string_view text);
PartialOrientation load_orientation_file(const Multigraph& g, const std::filesystem::path& path);
std::string format_orientation(const PartialOrientation& o);
/// One line per edge: "0: a -> b", "1: b -- c".
std::string ascii_orientation(const PartialOrientation& o);
std::string fingerprint_hex(std::uint64_t fp);

}  // namespace orr
