#include "orr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "orr/hash.hpp"

namespace orr {

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

VertexSet VertexSet::single(std::size_t universe, VertexId v) {
  VertexSet s(universe);
  s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i)
    if ((mask >> i) & 1U) s.bits_[i] = true;
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe, std::span<const VertexId> members) {
  VertexSet s(universe);
  for (VertexId v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = !bits_[i];
  return s;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

// --------------------------------------------------------------- Multigraph

struct Multigraph::Data {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Edge> edges;
  std::vector<std::vector<EdgeId>> incident;
  std::vector<VertexId> lex;
  std::uint64_t id = 0;
};

Multigraph::Multigraph(std::vector<std::string> names, std::vector<Edge> edges) {
  if (names.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  auto data = std::make_shared<Data>();
  const std::size_t n = names.size();
  for (VertexId v = 0; v < n; ++v) {
    if (names[v].empty()) throw Error(ErrorCode::ParseError, "empty vertex name");
    if (!data->index.emplace(names[v], v).second)
      throw Error(ErrorCode::ParseError, "duplicate vertex name '" + names[v] + "'");
  }
  data->incident.resize(n);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    if (ed.first >= n || ed.second >= n) throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    if (ed.first == ed.second)
      throw Error(ErrorCode::LoopEdge, "edge " + std::to_string(e) + " is a loop at '" + names[ed.first] + "'");
    data->incident[ed.first].push_back(e);
    data->incident[ed.second].push_back(e);
  }

  // Connectivity from vertex 0, ignoring orientation.
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : data->incident[v]) {
      VertexId w = edges[e].other(v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "graph is not connected");

  data->lex.resize(n);
  std::iota(data->lex.begin(), data->lex.end(), VertexId{0});
  std::sort(data->lex.begin(), data->lex.end(), [&](VertexId a, VertexId b) { return names[a] < names[b]; });

  Fnv1a h;
  h.add(n);
  for (const auto& s : names) h.add(s);
  h.add(edges.size());
  for (const auto& e : edges) {
    h.add(e.first);
    h.add(e.second);
  }
  data->id = h.value();
  data->names = std::move(names);
  data->edges = std::move(edges);
  data_ = std::move(data);
}

std::size_t Multigraph::num_vertices() const noexcept { return data_->names.size(); }
std::size_t Multigraph::num_edges() const noexcept { return data_->edges.size(); }
const std::string& Multigraph::name(VertexId v) const { return data_->names.at(v); }

std::optional<VertexId> Multigraph::find_vertex(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

VertexId Multigraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

const Edge& Multigraph::edge(EdgeId e) const { return data_->edges.at(e); }
std::span<const Edge> Multigraph::edges() const noexcept { return data_->edges; }
std::span<const EdgeId> Multigraph::incident_edges(VertexId v) const { return data_->incident.at(v); }
Int Multigraph::degree(VertexId v) const { return static_cast<Int>(data_->incident.at(v).size()); }
std::span<const VertexId> Multigraph::lex_order() const noexcept { return data_->lex; }
VertexId Multigraph::base_vertex() const noexcept { return data_->lex.front(); }
std::uint64_t Multigraph::id() const noexcept { return data_->id; }

bool Multigraph::same_as(const Multigraph& other) const noexcept {
  return data_ == other.data_ || data_->id == other.data_->id;
}

Int Multigraph::induced_edge_count(const VertexSet& s) const {
  Int count = 0;
  for (const Edge& e : data_->edges)
    if (s.contains(e.first) && s.contains(e.second)) ++count;
  return count;
}

// ------------------------------------------------------------------ parsing

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Multigraph load_graph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& s) {
    auto [it, inserted] = index.emplace(s, names.size());
    if (inserted) names.push_back(s);
    return it->second;
  };

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected two vertex names, got " + std::to_string(toks.size()) +
                      " tokens");
    if (toks[0] == toks[1])
      throw Error(ErrorCode::LoopEdge, "line " + std::to_string(line_no) + ": loop at '" + toks[0] + "'");
    VertexId a = intern(toks[0]);
    VertexId b = intern(toks[1]);
    edges.push_back({a, b});
  }
  if (names.empty()) throw Error(ErrorCode::EmptyGraph, "no edges in graph document");
  return Multigraph(std::move(names), std::move(edges));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Multigraph load_graph_file(const std::filesystem::path& path) { return load_graph(read_text_file(path)); }

std::string format_graph(const Multigraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += g.name(e.first) + " " + g.name(e.second) + "\n";
  return out;
}

// ---------------------------------------------------------------- functions

Int genus(const Multigraph& g) {
  return static_cast<Int>(g.num_edges()) - static_cast<Int>(g.num_vertices()) + 1;
}

std::vector<std::vector<Int>> laplacian(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Int>> lap(n, std::vector<Int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++lap[e.first][e.first];
    ++lap[e.second][e.second];
    --lap[e.first][e.second];
    --lap[e.second][e.first];
  }
  return lap;
}

Int spanning_tree_count(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 1) return 1;
  auto lap = laplacian(g);
  // Drop the last row and column; Bareiss elimination keeps every
  // intermediate an exact integer minor.
  const std::size_t m = n - 1;
  std::vector<std::vector<__int128>> a(m, std::vector<__int128>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = lap[i][j];

  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < m && a[p][k] == 0) ++p;
      if (p == m) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        __int128 num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;
        checked_narrow(a[i][j]);
      }
    }
    prev = a[k][k];
  }
  return checked_narrow(sign * a[m - 1][m - 1]);
}

}  // namespace orr
