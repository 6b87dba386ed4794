#include "orr/cli.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "CLI11.hpp"
#include "orr/flows.hpp"
#include "orr/suites.hpp"

namespace orr::cli {

using io::json;

std::string CommandResult::render() const {
  if (text) return human_summary.empty() || human_summary.back() == '\n' ? human_summary : human_summary + "\n";
  return payload.dump() + "\n";
}

namespace {

struct Globals {
  bool verify = false;
  bool text = false;
  bool ascii = false;
  std::uint64_t seed = 1;
  std::string caps_text;
  std::size_t max_rounds = 0;

  Caps caps() const { return Caps::parse(caps_text, Caps::from_env()); }
  RunLimits limits() const { return RunLimits{max_rounds, {}}; }
};

[[noreturn]] void verification_failed(const std::string& what) {
  throw Error(ErrorCode::Internal, "verification failed: " + what);
}

std::string pairs_text(const Multigraph& g, const Divisor& d) {
  std::ostringstream out;
  bool first = true;
  for (VertexId v : g.lex_order()) {
    out << (first ? "" : " ") << g.name(v) << '=' << d[v];
    first = false;
  }
  return out.str();
}

std::string orientation_text(const PartialOrientation& o, bool ascii) {
  if (ascii) return ascii_orientation(o);
  return io::orientation_json(o).dump() + "\n";
}

void replay_to(const MoveCertificate& cert, const PartialOrientation& start, const PartialOrientation& expected) {
  if (!(replay(cert, start) == expected)) verification_failed("certificate does not end at the reported orientation");
}

std::size_t count_path_reversals(const MoveCertificate& cert) {
  return static_cast<std::size_t>(std::count_if(cert.moves.begin(), cert.moves.end(),
                                                [](const Move& m) { return std::holds_alternative<PathReversal>(m); }));
}

CommandResult cmd_info(const Globals& gl, const std::string& graph_path) {
  const Multigraph g = load_graph_file(graph_path);
  const Divisor k = canonical_divisor(g);
  json names = json::array();
  json kv = json::array();
  for (VertexId v : g.lex_order()) {
    names.push_back(g.name(v));
    kv.push_back(k[v]);
  }
  CommandResult r;
  r.payload = {{"vertices", names},         {"num_edges", g.num_edges()},
               {"genus", genus(g)},         {"trees", spanning_tree_count(g)},
               {"K", kv},                   {"base", g.name(g.base_vertex())}};
  if (gl.verify && k.degree() != 2 * genus(g) - 2) verification_failed("deg K != 2g - 2");
  std::ostringstream s;
  s << g.num_vertices() << " vertices, " << g.num_edges() << " edges, genus " << genus(g) << ", "
    << spanning_tree_count(g) << " spanning trees\nK: " << pairs_text(g, k) << "\n";
  r.human_summary = s.str();
  return r;
}

CommandResult cmd_reduce(const Globals& gl, const std::string& graph_path, const std::string& div_path,
                         const std::string& q_name) {
  const Multigraph g = load_graph_file(graph_path);
  const Divisor d = load_divisor_file(g, div_path);
  const VertexId q = q_name.empty() ? g.base_vertex() : g.vertex(q_name);
  const ReducedForm rf = reduce(g, d, q);
  if (gl.verify) {
    if (!(fire(g, d, rf.firing) == rf.divisor)) verification_failed("firing vector does not reproduce the input");
    if (!is_q_reduced(g, rf.divisor, q)) verification_failed("result is not q-reduced");
  }
  CommandResult r;
  r.payload = {{"q", g.name(q)},
               {"reduced", io::divisor_pairs(g, rf.divisor)},
               {"firing", io::divisor_pairs(g, Divisor(rf.firing))},
               {"degree", d.degree()}};
  r.human_summary = "reduced at " + g.name(q) + ": " + pairs_text(g, rf.divisor) + "\nfiring: " +
                    pairs_text(g, Divisor(rf.firing)) + "\n";
  return r;
}

CommandResult cmd_rank(const Globals& gl, const std::string& graph_path, const std::string& div_path, bool witnesses) {
  const Multigraph g = load_graph_file(graph_path);
  const Divisor d = load_divisor_file(g, div_path);
  RankOptions opts;
  opts.collect_witnesses = witnesses;
  const RankCertificate cert = rank(g, d, opts);
  if (gl.verify && !check_rank_certificate(g, d, cert)) verification_failed("rank certificate does not check");
  json wins = json::array();
  for (const auto& w : cert.winning_removals)
    wins.push_back({{"removed", io::divisor_pairs(g, w.removed)}, {"effective", io::divisor_pairs(g, w.effective)}});
  json c = {{"q", g.name(cert.q)},
            {"losing_removal", io::divisor_pairs(g, cert.losing_removal)},
            {"losing_reduced", io::divisor_pairs(g, cert.losing_reduced)}};
  if (witnesses) c["winning_removals"] = wins;
  CommandResult r;
  r.payload = {{"rank", cert.rank}, {"certificate", c}};
  r.human_summary = "rank " + std::to_string(cert.rank) + "\nremoving " + pairs_text(g, cert.losing_removal) +
                    " leaves no effective equivalent\n";
  return r;
}

CommandResult cmd_rr_check(const Globals&, const std::string& graph_path, const std::string& div_path) {
  const Multigraph g = load_graph_file(graph_path);
  const Divisor d = load_divisor_file(g, div_path);
  const RRReport rep = rr_verify(g, d);
  CommandResult r;
  r.payload = {{"rank", rep.rank},
               {"rank_complement", rep.rank_complement},
               {"degree", rep.degree},
               {"genus", rep.genus},
               {"complement", io::divisor_pairs(g, rep.complement)},
               {"holds", true}};
  std::ostringstream s;
  s << "r(D) = " << rep.rank << ", r(K-D) = " << rep.rank_complement << ", deg D - g + 1 = "
    << rep.degree - rep.genus + 1 << "\n";
  r.human_summary = s.str();
  return r;
}

CommandResult cmd_orient(const Globals& gl, const std::string& graph_path, const std::string& div_path,
                         const std::string& q_name) {
  const Multigraph g = load_graph_file(graph_path);
  const Divisor d = load_divisor_file(g, div_path);
  const PartialOrientation empty(g);
  CommandResult r;
  if (!q_name.empty()) {
    const VertexId q = g.vertex(q_name);
    const auto res = q_connected_orientation(g, d, q, gl.limits());
    r.payload = {{"q", g.name(q)}, {"realized", res.has_value()}};
    if (!res) {
      r.payload["orientation"] = nullptr;
      r.payload["divisor"] = nullptr;
      r.payload["certificate"] = nullptr;
      r.human_summary = "no " + g.name(q) + "-connected orientation is equivalent to D\n";
      return r;
    }
    if (gl.verify) {
      replay_to(res->certificate, empty, res->orientation);
      if (!reachable(res->orientation, VertexSet::single(g.num_vertices(), q)).is_full())
        verification_failed("orientation is not q-connected");
      if (!linearly_equivalent(g, res->orientation.divisor(), d)) verification_failed("D_O is not equivalent to D");
    }
    r.payload["orientation"] = io::orientation_json(res->orientation);
    r.payload["divisor"] = io::divisor_pairs(g, res->orientation.divisor());
    r.payload["certificate"] = io::certificate_json(g, res->certificate);
    r.human_summary = g.name(q) + "-connected orientation with D_O: " + pairs_text(g, res->orientation.divisor()) +
                      "\n" + orientation_text(res->orientation, gl.ascii);
    return r;
  }
  const Construction c = construct_orientation(g, d, gl.limits());
  if (gl.verify) {
    replay_to(c.certificate, empty, c.orientation);
    if (c.realized) {
      if (!linearly_equivalent(g, c.orientation.divisor(), d)) verification_failed("D_O is not equivalent to D");
    } else {
      const Divisor dO = c.orientation.divisor();
      bool below = !(c.obstruction == dO);
      for (VertexId v = 0; v < g.num_vertices(); ++v) below = below && c.obstruction[v] <= dO[v];
      if (!is_acyclic(c.orientation) || !below || !linearly_equivalent(g, c.obstruction, d))
        verification_failed("obstruction does not check");
    }
  }
  r.payload = {{"realized", c.realized},
               {"orientation", io::orientation_json(c.orientation)},
               {"divisor", io::divisor_pairs(g, c.orientation.divisor())},
               {"obstruction", c.realized ? json(nullptr) : io::divisor_pairs(g, c.obstruction)},
               {"certificate", io::certificate_json(g, c.certificate)}};
  r.human_summary = c.realized ? "realized, D_O: " + pairs_text(g, c.orientation.divisor()) + "\n"
                               : "not realizable; equivalent divisor " + pairs_text(g, c.obstruction) +
                                     " lies below an acyclic D_O\n";
  r.human_summary += orientation_text(c.orientation, gl.ascii);
  return r;
}

CommandResult cmd_unfurl(const Globals& gl, const std::string& graph_path, const std::string& ori_path) {
  const Multigraph g = load_graph_file(graph_path);
  const PartialOrientation o = load_orientation_file(g, ori_path);
  const DichotomyResult res = unfurl(o, gl.limits());
  if (gl.verify) {
    replay_to(res.certificate, o, res.orientation);
    if (res.outcome == Outcome::Acyclic && !is_acyclic(res.orientation)) verification_failed("result has a cycle");
    if (res.outcome == Outcome::Sourceless && !res.orientation.sources().empty())
      verification_failed("result has a source");
  }
  CommandResult r;
  r.payload = {{"outcome", std::string(to_string(res.outcome))},
               {"orientation", io::orientation_json(res.orientation)},
               {"divisor", io::divisor_pairs(g, res.orientation.divisor())},
               {"certificate", io::certificate_json(g, res.certificate)}};
  r.human_summary = std::string(to_string(res.outcome)) + " after " + std::to_string(res.certificate.moves.size()) +
                    " moves\n" + orientation_text(res.orientation, gl.ascii);
  return r;
}

CommandResult cmd_rank_orient(const Globals& gl, const std::string& graph_path, const std::string& ori_path) {
  const Multigraph g = load_graph_file(graph_path);
  const PartialOrientation o = load_orientation_file(g, ori_path);
  const PathReversalRank res = rank_via_path_reversals(o, nullptr, gl.limits());
  if (gl.verify) {
    replay_to(res.certificate, o, res.orientation);
    if (!is_acyclic(res.orientation)) verification_failed("final orientation has a cycle");
    if (count_path_reversals(res.certificate) != static_cast<std::size_t>(res.rank + 1))
      verification_failed("path reversal count is not rank + 1");
    if (rank(g, o.divisor()).rank != res.rank) verification_failed("rank disagrees with the divisor rank");
  }
  CommandResult r;
  r.payload = {{"rank", res.rank},
               {"path_reversals", res.path_reversals},
               {"orientation", io::orientation_json(res.orientation)},
               {"certificate", io::certificate_json(g, res.certificate)}};
  r.human_summary = "rank " + std::to_string(res.rank) + " (" + std::to_string(res.path_reversals) +
                    " path reversals to an acyclic orientation)\n" + orientation_text(res.orientation, gl.ascii);
  return r;
}

CommandResult cmd_break(const Globals& gl, const std::string& graph_path, const std::string& div_path,
                        const std::string& q_name) {
  const Multigraph g = load_graph_file(graph_path);
  const Divisor d = load_divisor_file(g, div_path);
  const VertexId q = q_name.empty() ? g.base_vertex() : g.vertex(q_name);
  const Divisor b = break_divisor(g, d, q, gl.limits());
  if (gl.verify) {
    if (!linearly_equivalent(g, b, d)) verification_failed("break divisor is not equivalent to D");
    Divisor shifted = b;
    shifted[q] -= 1;
    if (!is_orientable(g, shifted, gl.caps())) verification_failed("B - (q) is not orientable");
  }
  CommandResult r;
  r.payload = {{"break", io::divisor_pairs(g, b)}};
  r.human_summary = "break divisor: " + pairs_text(g, b) + "\n";
  return r;
}

CommandResult cmd_maxflow(const Globals& gl, const std::string& net_path, const std::string& s, const std::string& t,
                          bool via_orientability) {
  const FlowNetwork n = load_network_file(net_path, s, t);
  Int value = 0;
  std::vector<Int> flow;
  VertexSet cut;
  if (via_orientability) {
    MfmcResult res = mfmc_via_orientability(n, gl.caps());
    value = res.value;
    flow = std::move(res.flow);
    cut = std::move(res.cut);
  } else {
    FlowResult res = max_flow(n);
    value = res.value;
    flow = std::move(res.flow);
    cut = std::move(res.cut);
  }
  if (gl.verify) {
    std::vector<Int> net(n.num_vertices(), 0);
    for (std::size_t i = 0; i < n.arcs.size(); ++i) {
      if (flow[i] < 0 || flow[i] > n.arcs[i].capacity) verification_failed("capacity violated");
      net[n.arcs[i].from] -= flow[i];
      net[n.arcs[i].to] += flow[i];
    }
    for (VertexId v = 0; v < n.num_vertices(); ++v)
      if (v != n.source && v != n.sink && net[v] != 0) verification_failed("conservation violated");
    if (net[n.sink] != value) verification_failed("flow value mismatch");
    if (!cut.contains(n.source) || cut.contains(n.sink) || cut_capacity(n, cut) != value)
      verification_failed("cut does not certify the value");
  }
  std::vector<std::string> side;
  for (VertexId v : cut.members()) side.push_back(n.names[v]);
  std::sort(side.begin(), side.end());
  json support = json::array();
  for (std::size_t i = 0; i < n.arcs.size(); ++i)
    if (flow[i] > 0)
      support.push_back({{"arc", i}, {"from", n.names[n.arcs[i].from]}, {"to", n.names[n.arcs[i].to]}, {"flow", flow[i]}});
  CommandResult r;
  r.payload = {{"value", value}, {"cut", side}, {"flow", support}};
  r.human_summary = "max flow " + std::to_string(value) + ", min cut source side: " + json(side).dump() + "\n";
  return r;
}

CommandResult cmd_orientable(const Globals& gl, const std::string& graph_path, const std::string& div_path,
                             bool partial) {
  const Multigraph g = load_graph_file(graph_path);
  const Divisor d = load_divisor_file(g, div_path);
  const Caps caps = gl.caps();
  CommandResult r;
  if (partial) {
    const bool ok = is_partially_orientable(g, d, caps);
    r.payload = {{"partial", true}, {"orientable", ok}, {"orientation", nullptr}};
    r.human_summary = ok ? "D = D_O for some partial orientation\n" : "no partial orientation has D_O = D\n";
    return r;
  }
  const bool ok = is_orientable(g, d, caps);
  r.payload = {{"partial", false}, {"orientable", ok}, {"orientation", nullptr}};
  r.human_summary = ok ? "D = D_O for some full orientation\n" : "no full orientation has D_O = D\n";
  if (ok) {
    const PartialOrientation o = orient_via_flow(g, d);
    if (gl.verify && !(o.is_full() && o.divisor() == d)) verification_failed("witness orientation has the wrong divisor");
    r.payload["orientation"] = io::orientation_json(o);
    r.human_summary += orientation_text(o, gl.ascii);
  }
  return r;
}

json report_json(const suites::Report& rep) {
  return {{"suite", rep.suite},
          {"passed", rep.passed},
          {"checked", rep.checked},
          {"counterexample", rep.passed ? json(nullptr) : json(rep.counterexample)}};
}

CommandResult from_report(const suites::Report& rep) {
  CommandResult r;
  r.payload = report_json(rep);
  r.ok = rep.passed;
  r.exit_code = rep.passed ? 0 : 1;
  r.human_summary = rep.suite + ": " + (rep.passed ? "PASS" : "FAIL") + " (" + std::to_string(rep.checked) + " checks)";
  if (!rep.passed) r.human_summary += "\n" + rep.counterexample;
  r.human_summary += "\n";
  return r;
}

CommandResult error_result(ErrorCode code, const std::string& message) {
  CommandResult r;
  r.ok = false;
  r.exit_code = code == ErrorCode::UsageError ? 2 : 1;
  r.payload = {{"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
  r.human_summary = "error: " + std::string(to_string(code)) + ": " + message + "\n";
  return r;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Divisors, partial orientations and reversal certificates on multigraphs", "orient-rr"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_flag("--verify", gl.verify, "Replay and check every certificate before printing");
  app.add_flag("--text", gl.text, "Print a human summary instead of JSON");
  app.add_flag("--ascii", gl.ascii, "Human summary with edge arrows for orientations");
  app.add_option("--seed", gl.seed, "Seed for randomized fixture generation");
  app.add_option("--caps", gl.caps_text, "Enumeration caps, e.g. chi=22,partial=13 (on top of ORIENT_RR_CAPS)");
  app.add_option("--max-rounds", gl.max_rounds, "Round limit for the iterative algorithms (0 = none)");

  std::string graph, second, q, s, t, suite;
  bool witnesses = false, via = false, partial = false;
  std::size_t count = 200, max_vertices = 10;
  Int max_capacity = 9;

  auto* info = app.add_subcommand("info", "Genus, spanning tree count and canonical divisor");
  info->add_option("graph", graph)->required();

  auto* red = app.add_subcommand("reduce", "q-reduced form and firing vector");
  red->add_option("graph", graph)->required();
  red->add_option("divisor", second)->required();
  red->add_option("--q", q, "Base vertex (default: least name)");

  auto* rk = app.add_subcommand("rank", "Rank with a certificate");
  rk->add_option("graph", graph)->required();
  rk->add_option("divisor", second)->required();
  rk->add_flag("--witnesses", witnesses, "List every winning removal");

  auto* rr = app.add_subcommand("rr-check", "Check r(D) - r(K-D) = deg D - g + 1");
  rr->add_option("graph", graph)->required();
  rr->add_option("divisor", second)->required();

  auto* ori = app.add_subcommand("orient", "Partial orientation with divisor equivalent to D, or an obstruction");
  ori->add_option("graph", graph)->required();
  ori->add_option("divisor", second)->required();
  ori->add_option("--q", q, "Ask for a q-connected orientation");

  auto* unf = app.add_subcommand("unfurl", "Reach an acyclic or sourceless equivalent orientation");
  unf->add_option("graph", graph)->required();
  unf->add_option("orientation", second)->required();

  auto* ro = app.add_subcommand("rank-orient", "Rank of D_O by directed path reversals");
  ro->add_option("graph", graph)->required();
  ro->add_option("orientation", second)->required();

  auto* br = app.add_subcommand("break-divisor", "Break divisor equivalent to a degree-g divisor");
  br->add_option("graph", graph)->required();
  br->add_option("divisor", second)->required();
  br->add_option("--q", q, "Base vertex (default: least name)");

  auto* mf = app.add_subcommand("maxflow", "Maximum flow and minimum cut");
  mf->add_option("network", graph)->required();
  mf->add_option("--s", s, "Source vertex")->required();
  mf->add_option("--t", t, "Sink vertex")->required();
  mf->add_flag("--via-orientability", via, "Compute the flow through divisor orientability");

  auto* orb = app.add_subcommand("orientable", "Is D the divisor of a full (or partial) orientation");
  orb->add_option("graph", graph)->required();
  orb->add_option("divisor", second)->required();
  orb->add_flag("--partial", partial, "Allow unoriented edges");

  auto* orc = app.add_subcommand("oracle", "Brute-force cross-checks");
  orc->require_subcommand(1);
  auto* ver = orc->add_subcommand("verify", "Run one suite on a graph");
  ver->add_option("graph", graph)->required();
  ver->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suites::names()));
  auto* omf = orc->add_subcommand("mfmc", "Max flow against brute-force min cut on random networks");
  omf->add_option("--count", count, "Number of networks");
  omf->add_option("--max-vertices", max_vertices, "Vertices per network")->check(CLI::Range(2, 16));
  omf->add_option("--max-capacity", max_capacity, "Largest capacity")->check(CLI::Range(0, 1000));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.text = true;
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    r.human_summary = target->help();
    return r;
  } catch (const CLI::CallForAllHelp&) {
    CommandResult r;
    r.text = true;
    r.human_summary = app.help("", CLI::AppFormatMode::All);
    return r;
  } catch (const CLI::ParseError& e) {
    auto r = error_result(ErrorCode::UsageError, e.what());
    r.text = true;
    return r;
  }

  const bool text = gl.text || gl.ascii;
  CommandResult r;
  try {
    if (info->parsed()) r = cmd_info(gl, graph);
    else if (red->parsed()) r = cmd_reduce(gl, graph, second, q);
    else if (rk->parsed()) r = cmd_rank(gl, graph, second, witnesses);
    else if (rr->parsed()) r = cmd_rr_check(gl, graph, second);
    else if (ori->parsed()) r = cmd_orient(gl, graph, second, q);
    else if (unf->parsed()) r = cmd_unfurl(gl, graph, second);
    else if (ro->parsed()) r = cmd_rank_orient(gl, graph, second);
    else if (br->parsed()) r = cmd_break(gl, graph, second, q);
    else if (mf->parsed()) r = cmd_maxflow(gl, graph, s, t, via);
    else if (orb->parsed()) r = cmd_orientable(gl, graph, second, partial);
    else if (ver->parsed()) r = from_report(suites::run(suite, load_graph_file(graph), gl.caps()));
    else if (omf->parsed()) {
      r = from_report(suites::mfmc(gl.seed, count, max_vertices, max_capacity));
      r.payload["seed"] = gl.seed;
      r.payload["count"] = count;
    }
  } catch (const Error& e) {
    std::string message = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    if (message.starts_with(prefix)) message.erase(0, prefix.size());
    r = error_result(e.code(), message);
  } catch (const std::exception& e) {
    r = error_result(ErrorCode::Internal, e.what());
  }
  r.text = text;
  return r;
}

}  // namespace orr::cli
