#include "orr/io.hpp"

#include <algorithm>

namespace orr::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, "certificate JSON: " + what); }

VertexId vertex_of(const Multigraph& g, const json& j) {
  if (!j.is_string()) bad("vertex must be a name");
  return g.vertex(j.get<std::string>());
}

std::vector<EdgeId> edges_of(const json& j) {
  if (!j.is_array()) bad("edge list must be an array");
  std::vector<EdgeId> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) bad("edge index must be a nonnegative integer");
    out.push_back(e.get<EdgeId>());
  }
  return out;
}

EdgeId edge_of(const json& j) {
  if (!j.is_number_unsigned()) bad("edge index must be a nonnegative integer");
  return j.get<EdgeId>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t parse_hex(const json& j) {
  if (!j.is_string()) bad("fingerprint must be a hex string");
  const auto s = j.get<std::string>();
  if (s.empty() || s.size() > 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
    bad("fingerprint must be up to 16 lowercase hex digits");
  return std::stoull(s, nullptr, 16);
}

}  // namespace

json divisor_pairs(const Multigraph& g, const Divisor& d) {
  check_divisor(g, d);
  std::vector<VertexId> order(g.lex_order().begin(), g.lex_order().end());
  json out = json::array();
  for (VertexId v : order) out.push_back(json::array({g.name(v), d[v]}));
  return out;
}

Divisor divisor_from_json(const Multigraph& g, const json& j) {
  Divisor d(g.num_vertices());
  std::vector<bool> seen(g.num_vertices(), false);
  auto set = [&](const std::string& name, const json& value) {
    if (!value.is_number_integer()) throw Error(ErrorCode::ParseError, "divisor value for '" + name + "' is not an integer");
    VertexId v = g.vertex(name);
    if (seen[v]) throw Error(ErrorCode::ParseError, "vertex '" + name + "' listed twice");
    seen[v] = true;
    d[v] = value.get<Int>();
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) set(k, v);
  } else if (j.is_array()) {
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string()) throw Error(ErrorCode::ParseError, "expected [name, value]");
      set(p[0].get<std::string>(), p[1]);
    }
  } else {
    throw Error(ErrorCode::ParseError, "divisor must be an object or a list of pairs");
  }
  return d;
}

json orientation_json(const PartialOrientation& o) {
  json out = json::array();
  for (EdgeId e = 0; e < o.num_edges(); ++e)
    out.push_back(o.state(e) == EdgeState::TowardSecond ? ">" : o.state(e) == EdgeState::TowardFirst ? "<" : "-");
  return out;
}

PartialOrientation orientation_from_json(const Multigraph& g, const json& j) {
  if (!j.is_array() || j.size() != g.num_edges()) throw Error(ErrorCode::ParseError, "orientation needs one token per edge");
  std::vector<EdgeState> states;
  for (const auto& t : j) {
    const std::string s = t.is_string() ? t.get<std::string>() : "";
    if (s == ">") states.push_back(EdgeState::TowardSecond);
    else if (s == "<") states.push_back(EdgeState::TowardFirst);
    else if (s == "-") states.push_back(EdgeState::Unoriented);
    else throw Error(ErrorCode::ParseError, "orientation token must be '>', '<' or '-'");
  }
  return PartialOrientation(g, std::move(states));
}

json vertex_set_json(const Multigraph& g, const VertexSet& s) {
  std::vector<std::string> names;
  for (VertexId v : s.members()) names.push_back(g.name(v));
  std::sort(names.begin(), names.end());
  return names;
}

json move_json(const Multigraph& g, const Move& m) {
  json j{{"type", move_kind(m)}};
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, EdgePivot>) {
          j["in_edge"] = mv.in_edge;
          j["un_edge"] = mv.un_edge;
          j["vertex"] = g.name(mv.vertex);
        } else if constexpr (std::is_same_v<T, CycleReversal> || std::is_same_v<T, PathReversal>) {
          j["edges"] = mv.edges;
        } else if constexpr (std::is_same_v<T, CutReversal>) {
          j["side"] = vertex_set_json(g, mv.side);
        } else if constexpr (std::is_same_v<T, JacobsLadder>) {
          j["path"] = mv.path;
          j["terminal_edge"] = mv.terminal_edge;
        } else if constexpr (std::is_same_v<T, UnorientEdge>) {
          j["edge"] = mv.edge;
        } else {
          j["edge"] = mv.edge;
          j["head"] = g.name(mv.head);
        }
      },
      m);
  return j;
}

Move move_from_json(const Multigraph& g, const json& j) {
  const json& type = field(j, "type");
  if (!type.is_string()) bad("move type must be a string");
  const auto t = type.get<std::string>();
  if (t == "EdgePivot") return EdgePivot{edge_of(field(j, "in_edge")), edge_of(field(j, "un_edge")), vertex_of(g, field(j, "vertex"))};
  if (t == "CycleReversal") return CycleReversal{edges_of(field(j, "edges"))};
  if (t == "PathReversal") return PathReversal{edges_of(field(j, "edges"))};
  if (t == "CutReversal") {
    const json& side = field(j, "side");
    if (!side.is_array()) bad("cut side must be an array of names");
    VertexSet s(g.num_vertices());
    for (const auto& v : side) s.insert(vertex_of(g, v));
    return CutReversal{s};
  }
  if (t == "JacobsLadder") return JacobsLadder{edges_of(field(j, "path")), edge_of(field(j, "terminal_edge"))};
  if (t == "UnorientEdge") return UnorientEdge{edge_of(field(j, "edge"))};
  if (t == "OrientEdge") return OrientEdge{edge_of(field(j, "edge")), vertex_of(g, field(j, "head"))};
  bad("unknown move type '" + t + "'");
}

json certificate_json(const Multigraph& g, const MoveCertificate& c) {
  json moves = json::array();
  for (const Move& m : c.moves) moves.push_back(move_json(g, m));
  return json{{"initial", fingerprint_hex(c.initial)}, {"final", fingerprint_hex(c.final)}, {"moves", moves}};
}

MoveCertificate certificate_from_json(const Multigraph& g, const json& j) {
  MoveCertificate c;
  c.initial = parse_hex(field(j, "initial"));
  c.final = parse_hex(field(j, "final"));
  const json& moves = field(j, "moves");
  if (!moves.is_array()) bad("moves must be an array");
  for (const auto& m : moves) c.moves.push_back(move_from_json(g, m));
  return c;
}

}  // namespace orr::io
