#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "orr/oracle.hpp"
#include "orr/suites.hpp"

using namespace orr;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<suites::Report()> run;
};

Multigraph graph(const char* text) { return load_graph(text); }

const Multigraph p2 = graph("a b\n");
const Multigraph c3 = graph("a b\nb c\nc a\n");
const Multigraph c4 = graph("a b\nb c\nc d\nd a\n");
const Multigraph b2 = graph("u v\nu v\n");
const Multigraph b3 = graph("u v\nu v\nu v\n");
const Multigraph k4 = graph("a b\na c\na d\nb c\nb d\nc d\n");
const Multigraph c4_chord = graph("a b\nb c\nc d\nd a\na c\n");

suites::Report over(const std::string& name, const std::vector<Multigraph>& graphs,
                    const std::function<suites::Report(const Multigraph&)>& f) {
  suites::Report total(name);
  for (const auto& g : graphs) {
    total.merge(f(g));
    if (!total.passed) break;
  }
  return total;
}

Caps wide_caps() {
  Caps caps;
  caps.rank_vertices = 7;
  caps.rank_degree = 24;
  return caps;
}

suites::Report class_count_spots() {
  suites::Report r("gioan-spot");
  const std::pair<const Multigraph*, std::size_t> spots[] = {{&c3, 3}, {&b3, 3}, {&k4, 16}};
  for (auto [g, want] : spots) {
    ++r.checked;
    auto got = oracle::class_table_full(*g).classes.size();
    if (got != want) r.fail(format_graph(*g) + ": " + std::to_string(got) + " classes, expected " + std::to_string(want));
  }
  return r;
}

}  // namespace

int main() {
  const Caps caps = wide_caps();
  const auto upto5 = oracle::enumerate_connected_multigraphs(5);
  const auto upto6 = oracle::enumerate_connected_multigraphs(6);

  const std::vector<Criterion> criteria{
      {1, "riemann-roch identity", 60,
       [&] { return over("rr", {c3, b3, c4, k4, c4_chord}, [&](const Multigraph& g) { return suites::rr(g, caps); }); }},
      {2, "class count equals spanning trees", 30,
       [&] {
         auto r = over("gioan", upto5, [&](const Multigraph& g) { return suites::gioan(g, caps); });
         r.merge(class_count_spots());
         return r;
       }},
      {3, "acyclic/sourceless dichotomy", 120,
       [&] { return over("dichotomy", upto6, [&](const Multigraph& g) { return suites::dichotomy(g, caps); }); }},
      {4, "rank equals path-reversal distance", 120,
       [&] { return over("rank-distance", upto5, [&](const Multigraph& g) { return suites::rank_distance(g, caps); }); }},
      {5, "euler-characteristic characterizations", 120,
       [&] { return over("eulerpar", upto6, [&](const Multigraph& g) { return suites::eulerpar(g, caps); }); }},
      {6, "max-flow min-cut cross-validation", 60, [&] { return suites::mfmc(20261016, 200, 10, 9); }},
      {7, "break divisors", 60,
       [&] { return over("break", {c3, b3, k4}, [&](const Multigraph& g) { return suites::break_divisors(g, caps); }); }},
      {8, "pic0 torsor", 60,
       [&] { return over("torsor", upto5, [&](const Multigraph& g) { return suites::torsor(g, caps); }); }},
      {9, "realizability thresholds", 60,
       [&] {
         return over("realizability", {p2, c3, c4, b2, b3, k4, c4_chord},
                     [&](const Multigraph& g) { return suites::realizability(g, caps); });
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    suites::Report r("");
    try {
      r = c.run();
    } catch (const Error& e) {
      r.fail(std::string(to_string(e.code())) + ": " + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && secs > c.budget_seconds)
      r.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    if (!r.passed) ++failures;
    std::printf("criterion %d %-40s %s  checks=%llu  %.2fs%s%s\n", c.id, c.name.c_str(), r.passed ? "PASS" : "FAIL",
                static_cast<unsigned long long>(r.checked), secs, r.passed ? "" : "  counterexample: ",
                r.counterexample.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
