#include "orr/orientation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <deque>
#include <sstream>

#include "orr/hash.hpp"

namespace orr {

PartialOrientation::PartialOrientation(Multigraph g)
    : g_(std::move(g)), states_(g_.num_edges(), EdgeState::Unoriented) {}

PartialOrientation::PartialOrientation(Multigraph g, std::vector<EdgeState> states)
    : g_(std::move(g)), states_(std::move(states)) {
  if (states_.size() != g_.num_edges())
    throw Error(ErrorCode::PreconditionViolated, "orientation has " + std::to_string(states_.size()) +
                                                     " edge states, graph has " + std::to_string(g_.num_edges()));
}

VertexId PartialOrientation::head(EdgeId e) const {
  switch (state(e)) {
    case EdgeState::TowardFirst: return g_.edge(e).first;
    case EdgeState::TowardSecond: return g_.edge(e).second;
    case EdgeState::Unoriented: break;
  }
  throw Error(ErrorCode::PreconditionViolated, "edge " + std::to_string(e) + " is unoriented");
}

VertexId PartialOrientation::tail(EdgeId e) const { return g_.edge(e).other(head(e)); }

void PartialOrientation::orient(EdgeId e, VertexId h) {
  const Edge& ed = g_.edge(e);
  if (h == ed.first) states_.at(e) = EdgeState::TowardFirst;
  else if (h == ed.second) states_.at(e) = EdgeState::TowardSecond;
  else throw Error(ErrorCode::PreconditionViolated, "vertex is not an endpoint of edge " + std::to_string(e));
}

void PartialOrientation::unorient(EdgeId e) { states_.at(e) = EdgeState::Unoriented; }

void PartialOrientation::reverse(EdgeId e) { orient(e, tail(e)); }

Int PartialOrientation::indegree(VertexId v) const {
  Int c = 0;
  for (EdgeId e : g_.incident_edges(v))
    if (points_to(e, v)) ++c;
  return c;
}

Divisor PartialOrientation::divisor() const {
  Divisor d(g_.num_vertices(), -1);
  for (EdgeId e = 0; e < states_.size(); ++e)
    if (is_oriented(e)) ++d[head(e)];
  return d;
}

VertexSet PartialOrientation::sources() const {
  Divisor d = divisor();
  VertexSet s(g_.num_vertices());
  for (VertexId v = 0; v < g_.num_vertices(); ++v)
    if (d[v] < 0) s.insert(v);
  return s;
}

std::size_t PartialOrientation::num_oriented() const {
  return static_cast<std::size_t>(
      std::count_if(states_.begin(), states_.end(), [](EdgeState s) { return s != EdgeState::Unoriented; }));
}

std::uint64_t PartialOrientation::fingerprint() const {
  Fnv1a h;
  h.add(g_.id());
  h.add(states_.size());
  for (EdgeState s : states_) h.add(static_cast<std::uint64_t>(s));
  return h.value();
}

VertexSet reachable(const PartialOrientation& o, const VertexSet& x) {
  const Multigraph& g = o.graph();
  VertexSet seen = x;
  std::vector<VertexId> stack = x.members();
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident_edges(v)) {
      if (!o.is_oriented(e) || o.tail(e) != v) continue;
      VertexId w = o.head(e);
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<EdgeId> find_directed_cycle(const PartialOrientation& o) {
  const Multigraph& g = o.graph();
  const std::size_t n = g.num_vertices();
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> color(n, White);
  std::vector<EdgeId> via(n, 0);  // edge used to enter a grey vertex

  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != White) continue;
    // Iterative DFS; frame = (vertex, next incident position).
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      auto inc = g.incident_edges(v);
      if (pos == inc.size()) {
        color[v] = Black;
        stack.pop_back();
        continue;
      }
      EdgeId e = inc[pos++];
      if (!o.is_oriented(e) || o.tail(e) != v) continue;
      VertexId w = o.head(e);
      if (color[w] == Grey) {
        std::vector<EdgeId> cycle{e};
        for (VertexId x = v; x != w; x = o.tail(via[x])) cycle.push_back(via[x]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[w] == White) {
        color[w] = Grey;
        via[w] = e;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

bool is_acyclic(const PartialOrientation& o) { return find_directed_cycle(o).empty(); }

Classification classify(const PartialOrientation& o, VertexId q) {
  const Multigraph& g = o.graph();
  if (q >= g.num_vertices()) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
  Classification c;
  c.q = q;
  c.acyclic = is_acyclic(o);
  c.sourceless = o.sources().empty();
  ensure(c.sourceless == o.divisor().is_effective(), "sourceless disagrees with effective D_O");
  c.full = o.is_full();
  c.q_connected = reachable(o, VertexSet::single(g.num_vertices(), q)).is_full();
  return c;
}

std::vector<EdgeId> shortest_directed_path(const PartialOrientation& o, VertexId from, VertexId to) {
  const Multigraph& g = o.graph();
  const std::size_t n = g.num_vertices();
  if (from == to) return {};
  std::vector<bool> seen(n, false);
  std::vector<EdgeId> via(n, 0);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident_edges(v)) {
      if (!o.is_oriented(e) || o.tail(e) != v) continue;
      VertexId w = o.head(e);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      if (w == to) {
        std::vector<EdgeId> path;
        for (VertexId x = to; x != from; x = o.tail(via[x])) path.push_back(via[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return {};
}

PartialOrientation base_orientation(const Multigraph& g) {
  std::vector<EdgeState> states;
  for (const Edge& e : g.edges())
    states.push_back(e.second > e.first ? EdgeState::TowardSecond : EdgeState::TowardFirst);
  return PartialOrientation(g, std::move(states));
}

PartialOrientation parse_orientation(const Multigraph& g, std::string_view text) {
  std::vector<EdgeState> states(g.num_edges(), EdgeState::Unoriented);
  std::vector<bool> seen(g.num_edges(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks.front().front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (toks.size() != 2) throw Error(ErrorCode::ParseError, where + "expected 'edgeIndex >|<|-'");
    std::size_t idx = 0;
    const std::string& s = toks[0];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), idx);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorCode::ParseError, where + "bad edge index '" + s + "'");
    if (idx >= g.num_edges()) throw Error(ErrorCode::ParseError, where + "edge index out of range");
    if (seen[idx]) throw Error(ErrorCode::ParseError, where + "edge " + s + " listed twice");
    seen[idx] = true;
    if (toks[1] == ">") states[idx] = EdgeState::TowardSecond;
    else if (toks[1] == "<") states[idx] = EdgeState::TowardFirst;
    else if (toks[1] == "-") states[idx] = EdgeState::Unoriented;
    else throw Error(ErrorCode::ParseError, where + "state must be '>', '<' or '-'");
  }
  return PartialOrientation(g, std::move(states));
}

PartialOrientation load_orientation_file(const Multigraph& g, const std::filesystem::path& path) {
  return parse_orientation(g, read_text_file(path));
}

std::string format_orientation(const PartialOrientation& o) {
  std::string out;
  for (EdgeId e = 0; e < o.num_edges(); ++e) {
    const char* s = o.state(e) == EdgeState::TowardSecond ? ">" : o.state(e) == EdgeState::TowardFirst ? "<" : "-";
    out += std::to_string(e) + " " + s + "\n";
  }
  return out;
}

std::string ascii_orientation(const PartialOrientation& o) {
  const Multigraph& g = o.graph();
  std::string out;
  for (EdgeId e = 0; e < o.num_edges(); ++e) {
    out += std::to_string(e) + ": ";
    if (o.is_oriented(e)) out += g.name(o.tail(e)) + " -> " + g.name(o.head(e));
    else out += g.name(g.edge(e).first) + " -- " + g.name(g.edge(e).second);
    out += "\n";
  }
  return out;
}

std::string fingerprint_hex(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

}  // namespace orr
