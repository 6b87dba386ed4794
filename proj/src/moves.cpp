#include "orr/moves.hpp"

#include <algorithm>

namespace orr {

namespace {

[[noreturn]] void violated(const std::string& kind, const std::string& detail) {
  throw Error(ErrorCode::PreconditionViolated, kind + ": " + detail);
}

std::string edge_str(EdgeId e) { return "edge " + std::to_string(e); }

void check_edge(const PartialOrientation& o, EdgeId e, const std::string& kind) {
  if (e >= o.num_edges()) violated(kind, edge_str(e) + " does not exist");
}

void check_distinct(const std::vector<EdgeId>& edges, const std::string& kind) {
  std::vector<EdgeId> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) violated(kind, "repeated edge");
}

struct Applier {
  PartialOrientation& o;

  void operator()(const EdgePivot& m) {
    const std::string kind = "EdgePivot";
    check_edge(o, m.in_edge, kind);
    check_edge(o, m.un_edge, kind);
    if (m.vertex >= o.graph().num_vertices()) violated(kind, "pivot vertex does not exist");
    if (m.in_edge == m.un_edge) violated(kind, "in-edge and un-edge coincide");
    if (!o.points_to(m.in_edge, m.vertex)) violated(kind, edge_str(m.in_edge) + " is not oriented toward the pivot");
    if (o.is_oriented(m.un_edge)) violated(kind, edge_str(m.un_edge) + " is already oriented");
    if (!o.graph().edge(m.un_edge).touches(m.vertex)) violated(kind, edge_str(m.un_edge) + " misses the pivot");
    o.unorient(m.in_edge);
    o.orient(m.un_edge, m.vertex);
  }

  void operator()(const CycleReversal& m) {
    const std::string kind = "CycleReversal";
    if (m.edges.empty()) violated(kind, "empty cycle");
    for (EdgeId e : m.edges) check_edge(o, e, kind);
    check_distinct(m.edges, kind);
    std::vector<VertexId> tails;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      EdgeId e = m.edges[i], next = m.edges[(i + 1) % m.edges.size()];
      if (!o.is_oriented(e)) violated(kind, edge_str(e) + " is unoriented");
      if (!o.is_oriented(next) || o.head(e) != o.tail(next)) violated(kind, "edges do not form a directed cycle");
      tails.push_back(o.tail(e));
    }
    std::sort(tails.begin(), tails.end());
    if (std::adjacent_find(tails.begin(), tails.end()) != tails.end()) violated(kind, "cycle is not simple");
    for (EdgeId e : m.edges) o.reverse(e);
  }

  void operator()(const CutReversal& m) {
    const std::string kind = "CutReversal";
    const Multigraph& g = o.graph();
    if (m.side.universe() != g.num_vertices()) violated(kind, "vertex set has the wrong universe");
    if (m.side.empty() || m.side.is_full()) violated(kind, "cut side must be a nonempty proper subset");
    int direction = 0;  // +1 toward side, -1 away from side
    std::vector<EdgeId> cut;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (m.side.contains(ed.first) == m.side.contains(ed.second)) continue;
      if (!o.is_oriented(e)) violated(kind, "cut is not saturated: " + edge_str(e) + " is unoriented");
      int dir = m.side.contains(o.head(e)) ? 1 : -1;
      if (direction == 0) direction = dir;
      else if (dir != direction) violated(kind, "cut is not consistently oriented");
      cut.push_back(e);
    }
    for (EdgeId e : cut) o.reverse(e);
  }

  void operator()(const PathReversal& m) {
    directed_path_vertices(o, m.edges);
    for (EdgeId e : m.edges) o.reverse(e);
  }

  void operator()(const JacobsLadder& m) {
    const std::string kind = "JacobsLadder";
    auto verts = directed_path_vertices(o, m.path);
    check_edge(o, m.terminal_edge, kind);
    if (o.is_oriented(m.terminal_edge)) violated(kind, "terminal " + edge_str(m.terminal_edge) + " is oriented");
    VertexId end = verts.back();
    if (!o.graph().edge(m.terminal_edge).touches(end)) violated(kind, "terminal edge misses the path end");
    o.orient(m.terminal_edge, end);
    for (std::size_t i = m.path.size(); i-- > 1;) o.reverse(m.path[i]);
    o.unorient(m.path.front());
  }

  void operator()(const UnorientEdge& m) {
    check_edge(o, m.edge, "UnorientEdge");
    if (!o.is_oriented(m.edge)) violated("UnorientEdge", edge_str(m.edge) + " is already unoriented");
    o.unorient(m.edge);
  }

  void operator()(const OrientEdge& m) {
    check_edge(o, m.edge, "OrientEdge");
    if (o.is_oriented(m.edge)) violated("OrientEdge", edge_str(m.edge) + " is already oriented");
    if (!o.graph().edge(m.edge).touches(m.head)) violated("OrientEdge", "head is not an endpoint");
    o.orient(m.edge, m.head);
  }
};

}  // namespace

std::string move_kind(const Move& m) {
  static const char* names[] = {"EdgePivot",    "CycleReversal", "CutReversal", "PathReversal",
                                "JacobsLadder", "UnorientEdge",  "OrientEdge"};
  return names[m.index()];
}

std::vector<VertexId> directed_path_vertices(const PartialOrientation& o, const std::vector<EdgeId>& edges) {
  const std::string kind = "directed path";
  if (edges.empty()) violated(kind, "empty path");
  for (EdgeId e : edges) {
    check_edge(o, e, kind);
    if (!o.is_oriented(e)) violated(kind, edge_str(e) + " is unoriented");
  }
  std::vector<VertexId> verts{o.tail(edges.front())};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (o.tail(edges[i]) != verts.back()) violated(kind, "edges are not consecutive");
    verts.push_back(o.head(edges[i]));
  }
  std::vector<VertexId> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) violated(kind, "path is not simple");
  return verts;
}

void apply_move_inplace(PartialOrientation& o, const Move& m) { std::visit(Applier{o}, m); }

PartialOrientation apply_move(const PartialOrientation& o, const Move& m) {
  PartialOrientation out = o;
  apply_move_inplace(out, m);
  return out;
}

PartialOrientation replay(const MoveCertificate& cert, const PartialOrientation& o) {
  if (o.fingerprint() != cert.initial)
    throw Error(ErrorCode::FingerprintMismatch, "initial orientation " + fingerprint_hex(o.fingerprint()) +
                                                    " does not match certificate " + fingerprint_hex(cert.initial));
  PartialOrientation cur = o;
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    try {
      apply_move_inplace(cur, cert.moves[i]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionViolated) throw;
      throw Error(ErrorCode::PreconditionViolated, "step " + std::to_string(i) + ": " + e.what());
    }
  }
  if (cur.fingerprint() != cert.final)
    throw Error(ErrorCode::FingerprintMismatch, "replayed orientation " + fingerprint_hex(cur.fingerprint()) +
                                                    " does not match certificate " + fingerprint_hex(cert.final));
  return cur;
}

CertificateRecorder::CertificateRecorder(PartialOrientation start)
    : initial_(start.fingerprint()), current_(std::move(start)) {}

void CertificateRecorder::apply(const Move& m) {
  apply_move_inplace(current_, m);
  moves_.push_back(m);
}

void CertificateRecorder::append(const MoveCertificate& cert) {
  ensure(cert.initial == current_.fingerprint(), "appended certificate starts elsewhere");
  for (const Move& m : cert.moves) apply(m);
  ensure(cert.final == current_.fingerprint(), "appended certificate ends elsewhere");
}

MoveCertificate CertificateRecorder::certificate() const {
  return MoveCertificate{initial_, moves_, current_.fingerprint()};
}

}  // namespace orr
