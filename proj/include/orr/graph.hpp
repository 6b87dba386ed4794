#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orr/checked.hpp"

namespace orr {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// An undirected edge; `first`/`second` keep the declaration order so that
/// orientation files can say "toward second endpoint".
struct Edge {
  VertexId first;
  VertexId second;

  VertexId other(VertexId v) const noexcept { return v == first ? second : first; }
  bool touches(VertexId v) const noexcept { return v == first || v == second; }
};

/// Subset of the vertex set of a fixed graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}

  static VertexSet all(std::size_t universe);
  static VertexSet single(std::size_t universe, VertexId v);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet from_members(std::size_t universe, std::span<const VertexId> members);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(VertexId v) const { return bits_.at(v); }
  void insert(VertexId v) { bits_.at(v) = true; }
  void erase(VertexId v) { bits_.at(v) = false; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == universe(); }
  VertexSet complement() const;
  std::vector<VertexId> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// Finite loopless connected undirected multigraph. Immutable; copies share
/// storage, so passing by value is cheap.
class Multigraph {
 public:
  /// Validates the invariants: nonempty, no loops, connected, unique names.
  Multigraph(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept;
  std::size_t num_edges() const noexcept;

  const std::string& name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws UnknownVertex.
  VertexId vertex(std::string_view name) const;

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const noexcept;
  std::span<const EdgeId> incident_edges(VertexId v) const;
  Int degree(VertexId v) const;

  /// Vertex ids sorted by name; every report iterates in this order.
  std::span<const VertexId> lex_order() const noexcept;
  /// Lexicographically least vertex, the default base point q.
  VertexId base_vertex() const noexcept;

  /// Content hash of names and edges.
  std::uint64_t id() const noexcept;
  bool same_as(const Multigraph& other) const noexcept;

  /// Number of edges with both ends in `s`.
  Int induced_edge_count(const VertexSet& s) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Parses the edge-list format: one "u v" per line, '#' comment lines,
/// blank lines ignored. Vertices are numbered in order of first appearance.
Multigraph load_graph(std::string_view text);
Multigraph load_graph_file(const std::filesystem::path& path);

/// Renders the edge-list format (round-trips through load_graph).
std::string format_graph(const Multigraph& g);

/// |E| - |V| + 1.
Int genus(const Multigraph& g);

/// Determinant of the reduced Laplacian by fraction-free elimination.
Int spanning_tree_count(const Multigraph& g);

/// Laplacian as a dense integer matrix, rows/columns in vertex-id order.
std::vector<std::vector<Int>> laplacian(const Multigraph& g);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace orr
