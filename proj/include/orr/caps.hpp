#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace orr {

/// Enumeration limits for the exhaustive routines. Exceeding a cap is a
/// TooLarge error; nothing is ever truncated.
struct Caps {
  std::size_t chi_vertices = 20;      // chi_global subset enumeration
  std::size_t partial_edges = 12;     // 3^|E| partial orientations
  std::size_t full_edges = 8;         // 2^|E| full orientations (class tables)
  std::size_t rank_vertices = 6;      // oracle brute_rank
  std::int64_t rank_degree = 12;      // oracle brute_rank |deg(D)|
  std::size_t distance_edges = 5;     // oracle path-reversal distance
  std::int64_t mfmc_capacity = 10000; // parallel-edge expansion in mfmc_via_orientability

  /// Defaults overridden by ORIENT_RR_CAPS, e.g. "chi=22,partial=13".
  /// Keys: chi, partial, full, rank, rank_degree, distance, mfmc.
  static Caps from_env();
  /// Applies "key=value,..." on top of `base`.
  static Caps parse(std::string_view text, Caps base);
  static Caps parse(std::string_view text);
};

inline Caps Caps::parse(std::string_view text) { return parse(text, Caps{}); }

}  // namespace orr
