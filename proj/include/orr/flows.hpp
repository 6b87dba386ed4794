#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orr/caps.hpp"
#include "orr/engine.hpp"

namespace orr {

struct Arc {
  VertexId from;
  VertexId to;
  Int capacity;
};

/// Directed network with integer capacities; parallel arcs allowed.
struct FlowNetwork {
  std::vector<std::string> names;
  std::vector<Arc> arcs;
  VertexId source = 0;
  VertexId sink = 1;

  std::size_t num_vertices() const noexcept { return names.size(); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// PreconditionViolated on s == t, negative capacity or bad endpoints.
  void validate() const;
};

/// "u v cap" lines, '#' comments. Vertices in order of first appearance;
/// `source` and `sink` must name vertices (UnknownVertex otherwise).
FlowNetwork parse_network(std::string_view text, std::string_view source, std::string_view sink);
FlowNetwork load_network_file(const std::filesystem::path& path, std::string_view source, std::string_view sink);

struct FlowResult {
  Int value = 0;
  std::vector<Int> flow;  // per arc
  VertexSet cut;          // source side of a minimum cut
};

/// Capacity of the arcs leaving `side`.
Int cut_capacity(const FlowNetwork& n, const VertexSet& side);

/// Shortest augmenting paths, ties broken by arc id. Asserts conservation
/// and value == capacity of the returned cut.
FlowResult max_flow(const FlowNetwork& n);

/// Full orientation with D_O == d exactly, built by flipping the support of
/// a maximum flow from the base orientation. Infeasible if none exists.
PartialOrientation orient_via_flow(const Multigraph& g, const Divisor& d);

/// deg d must be g - 1 (WrongDegree).
bool is_orientable(const Multigraph& g, const Divisor& d, const Caps& caps = {});

bool is_partially_orientable(const Multigraph& g, const Divisor& d, const Caps& caps = {});

/// The break divisor equivalent to d; deg d must be g (WrongDegree).
Divisor break_divisor(const Multigraph& g, const Divisor& d, const RunLimits& limits = {});
/// Same, with an explicit base vertex.
Divisor break_divisor(const Multigraph& g, const Divisor& d, VertexId q, const RunLimits& limits = {});

struct TorsorResult {
  PartialOrientation orientation;
  MoveCertificate certificate;
};

/// Acts by the degree-0 divisor z on a full orientation: the result's
/// divisor is equivalent to D_O + z.
TorsorResult torsor_act(const PartialOrientation& o, const Divisor& z, const RunLimits& limits = {});

struct MfmcResult {
  Int value = 0;
  std::vector<Int> flow;  // per arc
  VertexSet cut;          // source side
};

/// Flow value via orientability: capacities become parallel edges, the
/// value k is the largest with D_N + k((s) - (t)) orientable, and the flow is
/// the set of edges where the realizing orientation differs from N.
/// CapacityTooLarge above the expansion cap.
MfmcResult mfmc_via_orientability(const FlowNetwork& n, const Caps& caps = {});

}  // namespace orr
