#pragma once

#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orr/caps.hpp"
#include "orr/graph.hpp"

namespace orr {

/// Integer chip count per vertex, indexed by VertexId.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::size_t n, Int fill = 0) : v_(n, fill) {}
  explicit Divisor(std::vector<Int> values) : v_(std::move(values)) {}
  Divisor(std::initializer_list<Int> values) : v_(values) {}

  std::size_t size() const noexcept { return v_.size(); }
  Int operator[](VertexId v) const { return v_.at(v); }
  Int& operator[](VertexId v) { return v_.at(v); }
  const std::vector<Int>& values() const noexcept { return v_; }

  Int degree() const;
  /// Sum of positive (resp. negated negative) parts.
  Int positive_degree() const;
  Int negative_degree() const;
  bool is_effective() const noexcept;
  /// Pointwise D >= other.
  bool dominates(const Divisor& other) const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  Divisor operator-() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

  static Divisor unit(std::size_t n, VertexId v, Int amount = 1);

 private:
  std::vector<Int> v_;
};

/// K(v) = deg(v) - 2.
Divisor canonical_divisor(const Multigraph& g);

/// The all-ones divisor.
Divisor ones(const Multigraph& g);

/// Laplacian applied to an integer vector: (Δf)(v) = deg(v) f(v) - Σ_{u~v} f(u).
Divisor laplacian_apply(const Multigraph& g, std::span<const Int> f);

/// D - Δf.
Divisor fire(const Multigraph& g, const Divisor& d, std::span<const Int> f);
/// Fires every vertex of `s` once.
Divisor fire_set(const Multigraph& g, const Divisor& d, const VertexSet& s);

struct SubsetReport {
  VertexSet subset;
  Int chi = 0;
  Int chi_bar = 0;
};

/// χ(S,D) = deg(D|_S) + |S| - |E(G[S])| and
/// χ̄(S,D) = |E| - |E(G[S^c])| - |S| - deg(D|_S).
SubsetReport chi_report(const Multigraph& g, const Divisor& d, const VertexSet& s);

struct ChiGlobal {
  Int chi = 0;
  Int chi_bar = 0;
  VertexSet chi_witness;
  VertexSet chi_bar_witness;
};

/// Minimum of χ and χ̄ over all nonempty subsets. TooLarge above the cap.
ChiGlobal chi_global(const Multigraph& g, const Divisor& d, const Caps& caps = {});

/// "vertex integer" lines; omitted vertices are 0; '#' comment lines.
Divisor parse_divisor(const Multigraph& g, std::string_view text);
Divisor load_divisor_file(const Multigraph& g, const std::filesystem::path& path);

/// Canonical text form: "name value" lines sorted by vertex name.
std::string format_divisor(const Multigraph& g, const Divisor& d);

/// Throws PreconditionViolated unless d is defined on exactly the vertices of g.
void check_divisor(const Multigraph& g, const Divisor& d);

}  // namespace orr
