#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "orr/caps.hpp"
#include "orr/orientation.hpp"

// Brute-force ground truth. Nothing here calls the reduction, rank, engine
// or flow code; only the graph, divisor and orientation value types are shared.
namespace orr::oracle {

/// Linear-equivalence class keys from the adjugate of the reduced
/// Laplacian: D ~ D' iff key(D) == key(D').
class ClassKeyer {
 public:
  explicit ClassKeyer(const Multigraph& g);

  /// Number of classes per degree (the spanning tree count).
  Int order() const noexcept { return det_; }
  /// (deg D, adj(L~) D mod det).
  std::vector<Int> key(const Divisor& d) const;
  bool equivalent(const Divisor& a, const Divisor& b) const { return key(a) == key(b); }

 private:
  std::size_t n_;
  std::size_t q_;
  Int det_;
  std::vector<std::vector<Int>> adj_;  // rows/cols indexed by non-q vertices
};

/// All 3^|E| partial orientations, last edge varying fastest, states in
/// the order Unoriented < TowardFirst < TowardSecond. Restartable.
class PartialOrientationStream {
 public:
  PartialOrientationStream(const Multigraph& g, bool full_only);

  bool next(PartialOrientation& out);
  void reset();
  std::uint64_t total() const noexcept { return total_; }

 private:
  Multigraph g_;
  bool full_only_;
  std::vector<std::uint8_t> digits_;
  bool done_ = false;
  std::uint64_t total_ = 1;
};

/// TooLarge if |E| > caps.partial_edges.
PartialOrientationStream enumerate_partial_orientations(const Multigraph& g, const Caps& caps = {});
/// TooLarge if |E| > caps.full_edges.
PartialOrientationStream enumerate_full_orientations(const Multigraph& g, const Caps& caps = {});

struct ClassTable {
  struct Class {
    Divisor representative;  // lexicographically least member divisor
    std::vector<PartialOrientation> members;
  };
  std::vector<Class> classes;  // in order of first appearance
  std::size_t orientations = 0;
};

/// Full orientations bucketed by the class of D_O. TooLarge above caps.full_edges.
ClassTable class_table_full(const Multigraph& g, const Caps& caps = {});
/// Partial orientations with a fixed number of oriented edges, bucketed likewise.
ClassTable class_table_partial(const Multigraph& g, std::size_t oriented_edges, const Caps& caps = {});

/// Exhaustive rank: the least k such that some effective E of degree k makes
/// D - E inequivalent to every effective divisor, minus one.
class BruteRank {
 public:
  explicit BruteRank(const Multigraph& g, const Caps& caps = {});

  Int rank(const Divisor& d);
  const ClassKeyer& keyer() const noexcept { return keyer_; }

 private:
  bool effective_class(const Divisor& d);

  Multigraph g_;
  Caps caps_;
  ClassKeyer keyer_;
  std::map<Int, std::set<std::vector<Int>>> effective_keys_;  // by degree
  std::map<std::vector<Int>, Int> memo_;                           // by class key
};

Int brute_rank(const Multigraph& g, const Divisor& d, const Caps& caps = {});

/// Kahn's algorithm on the oriented edges.
bool acyclic(const PartialOrientation& o);

/// Distances in the path-reversal class graph, for one number of oriented
/// edges: nodes are classes, arcs are single directed-path reversals.
class PathReversalDistances {
 public:
  PathReversalDistances(const Multigraph& g, std::size_t oriented_edges, const Caps& caps = {});

  /// Distance from the class of o to the nearest class holding an acyclic
  /// orientation. o must have the table's number of oriented edges.
  Int distance(const PartialOrientation& o) const;

 private:
  ClassKeyer keyer_;
  std::size_t oriented_;
  std::map<std::vector<Int>, Int> dist_;
};

Int path_reversal_distance(const Multigraph& g, const PartialOrientation& o, const Caps& caps = {});

/// min over nonempty S of χ(S,D) and χ̄(S,D), recomputed from the definitions.
struct ChiMin {
  Int chi = 0;
  Int chi_bar = 0;
};
ChiMin chi_min(const Multigraph& g, const Divisor& d, const Caps& caps = {});

/// Some full orientation has D_O == d.
bool orientable_by_enumeration(const Multigraph& g, const Divisor& d, const Caps& caps = {});

/// Every connected loopless multigraph with 1..max_edges edges, one per
/// isomorphism class, vertices named v0, v1, ...
std::vector<Multigraph> enumerate_connected_multigraphs(std::size_t max_edges);

/// Representatives of the degree-0 classes, found by widening a box search.
std::vector<Divisor> picard_zero(const Multigraph& g);

}  // namespace orr::oracle
