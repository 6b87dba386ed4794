#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orr/caps.hpp"
#include "orr/graph.hpp"

// Cross-checks of the production algorithms against the oracle on one
// instance each. A report stops at the first counterexample.
namespace orr::suites {

struct Report {
  explicit Report(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // empty when passed

  void fail(std::string what);
  /// Folds another report in; keeps the first counterexample.
  void merge(const Report& other);
};

/// Box of divisor entries used by the divisor-ranging suites.
struct Box {
  Int lo = -3;
  Int hi = 3;
};

/// r(D) - r(K-D) = deg D - g + 1 with both ranks from the oracle, and the
/// production rank equal to the oracle rank.
Report rr(const Multigraph& g, const Caps& caps, Box box = {});

/// Number of full-orientation classes equals the spanning tree count, and
/// production equivalence agrees with the oracle's class buckets.
Report gioan(const Multigraph& g, const Caps& caps);

/// unfurl is Acyclic iff the oracle rank of D_O is -1, Sourceless iff it is
/// >= 0, and no class holds both an acyclic and a sourceless orientation.
Report dichotomy(const Multigraph& g, const Caps& caps);

/// rank_via_path_reversals equals oracle distance - 1, uses rank + 1 path
/// reversals, and its certificate replays to an acyclic orientation.
Report rank_distance(const Multigraph& g, const Caps& caps);

/// Orientability: enumeration iff min chi >= 0 iff is_orientable, for every
/// degree g-1 divisor in the box. Partial orientability: the image of D_O
/// equals {D >= -1, chi_bar >= 0} and matches is_partially_orientable.
Report eulerpar(const Multigraph& g, const Caps& caps, Box box = {});

/// break_divisor is idempotent, constant on classes, independent of the
/// base vertex, and takes spanning_tree_count values on degree-g divisors.
Report break_divisors(const Multigraph& g, const Caps& caps, Box box = {-2, 3});

/// The Pic^0 action on full-orientation classes is well defined and
/// simply transitive.
Report torsor(const Multigraph& g, const Caps& caps);

/// construct_orientation succeeds iff r(D + 1) >= 0 and a q-connected
/// orientation exists iff r(D + (q)) >= 0, ranks from the oracle.
Report realizability(const Multigraph& g, const Caps& caps, Box box = {});

/// max_flow equals the brute-force minimum cut on `count` random networks
/// (at most max_vertices vertices, capacities at most max_capacity), and
/// mfmc_via_orientability returns the same value. Every other network has
/// unit capacities.
Report mfmc(std::uint64_t seed, std::size_t count, std::size_t max_vertices = 10, Int max_capacity = 9);

/// Suite names accepted by run(): rr, gioan, dichotomy, rank-distance,
/// eulerpar, break, torsor, realizability.
const std::vector<std::string>& names();
/// Runs a suite with its default box (rr uses [-2, 2] to stay inside the
/// default rank caps). UsageError for an unknown name.
Report run(const std::string& name, const Multigraph& g, const Caps& caps);

}  // namespace orr::suites
