#include "orr/divisor.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace orr {

Int Divisor::degree() const {
  Int s = 0;
  for (Int x : v_) s = checked_add(s, x);
  return s;
}

Int Divisor::positive_degree() const {
  Int s = 0;
  for (Int x : v_)
    if (x > 0) s = checked_add(s, x);
  return s;
}

Int Divisor::negative_degree() const {
  Int s = 0;
  for (Int x : v_)
    if (x < 0) s = checked_sub(s, x);
  return s;
}

bool Divisor::is_effective() const noexcept {
  return std::all_of(v_.begin(), v_.end(), [](Int x) { return x >= 0; });
}

bool Divisor::dominates(const Divisor& other) const {
  ensure(size() == other.size(), "divisor size mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] < other.v_[i]) return false;
  return true;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  ensure(size() == o.size(), "divisor size mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = checked_add(v_[i], o.v_[i]);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  ensure(size() == o.size(), "divisor size mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = checked_sub(v_[i], o.v_[i]);
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor r(size());
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = checked_sub(0, v_[i]);
  return r;
}

Divisor Divisor::unit(std::size_t n, VertexId v, Int amount) {
  Divisor d(n);
  d[v] = amount;
  return d;
}

void check_divisor(const Multigraph& g, const Divisor& d) {
  if (d.size() != g.num_vertices())
    throw Error(ErrorCode::PreconditionViolated, "divisor has " + std::to_string(d.size()) + " entries, graph has " +
                                                     std::to_string(g.num_vertices()) + " vertices");
}

Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) k[v] = g.degree(v) - 2;
  return k;
}

Divisor ones(const Multigraph& g) { return Divisor(g.num_vertices(), 1); }

Divisor laplacian_apply(const Multigraph& g, std::span<const Int> f) {
  ensure(f.size() == g.num_vertices(), "firing vector size mismatch");
  Divisor out(g.num_vertices());
  for (const Edge& e : g.edges()) {
    Int diff = checked_sub(f[e.first], f[e.second]);
    out[e.first] = checked_add(out[e.first], diff);
    out[e.second] = checked_sub(out[e.second], diff);
  }
  return out;
}

Divisor fire(const Multigraph& g, const Divisor& d, std::span<const Int> f) {
  check_divisor(g, d);
  return d - laplacian_apply(g, f);
}

Divisor fire_set(const Multigraph& g, const Divisor& d, const VertexSet& s) {
  check_divisor(g, d);
  Divisor out = d;
  for (const Edge& e : g.edges()) {
    bool a = s.contains(e.first), b = s.contains(e.second);
    if (a && !b) {
      --out[e.first];
      ++out[e.second];
    } else if (b && !a) {
      --out[e.second];
      ++out[e.first];
    }
  }
  return out;
}

SubsetReport chi_report(const Multigraph& g, const Divisor& d, const VertexSet& s) {
  check_divisor(g, d);
  if (s.universe() != g.num_vertices()) throw Error(ErrorCode::PreconditionViolated, "subset universe mismatch");
  if (s.empty()) throw Error(ErrorCode::EmptySubset, "subset must be nonempty");
  Int deg_s = 0;
  for (VertexId v : s.members()) deg_s = checked_add(deg_s, d[v]);
  Int size = static_cast<Int>(s.size());
  Int inside = g.induced_edge_count(s);
  Int outside = g.induced_edge_count(s.complement());
  SubsetReport r{s, 0, 0};
  r.chi = checked_add(deg_s, size - inside);
  r.chi_bar = checked_sub(static_cast<Int>(g.num_edges()) - outside - size, deg_s);
  return r;
}

ChiGlobal chi_global(const Multigraph& g, const Divisor& d, const Caps& caps) {
  check_divisor(g, d);
  const std::size_t n = g.num_vertices();
  if (n > caps.chi_vertices || n > 62)
    throw Error(ErrorCode::TooLarge,
                "chi_global enumerates 2^" + std::to_string(n) + " subsets; cap is " + std::to_string(caps.chi_vertices));
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const Int m = static_cast<Int>(g.num_edges());

  std::vector<std::uint64_t> edge_masks;
  for (const Edge& e : g.edges()) edge_masks.push_back((std::uint64_t{1} << e.first) | (std::uint64_t{1} << e.second));
  auto induced = [&](std::uint64_t mask) {
    Int c = 0;
    for (std::uint64_t em : edge_masks)
      if ((mask & em) == em) ++c;
    return c;
  };

  ChiGlobal best;
  bool first = true;
  std::uint64_t chi_mask = 0, bar_mask = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    Int deg_s = 0;
    Int size = 0;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1U) {
        deg_s = checked_add(deg_s, d[v]);
        ++size;
      }
    Int chi = checked_add(deg_s, size - induced(mask));
    Int bar = checked_sub(m - induced(full & ~mask) - size, deg_s);
    if (first || chi < best.chi) {
      best.chi = chi;
      chi_mask = mask;
    }
    if (first || bar < best.chi_bar) {
      best.chi_bar = bar;
      bar_mask = mask;
    }
    first = false;
  }
  best.chi_witness = VertexSet::from_mask(n, chi_mask);
  best.chi_bar_witness = VertexSet::from_mask(n, bar_mask);
  return best;
}

Divisor parse_divisor(const Multigraph& g, std::string_view text) {
  Divisor d(g.num_vertices());
  std::vector<bool> seen(g.num_vertices(), false);
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
    if (toks.size() != 2) throw Error(ErrorCode::ParseError, where + "expected 'vertex integer'");
    VertexId v = g.vertex(toks[0]);
    Int value = 0;
    const std::string& s = toks[1];
    const char* begin = s.data();
    if (!s.empty() && s.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
    if (ec == std::errc::result_out_of_range) throw Error(ErrorCode::Overflow, where + "value out of 64-bit range");
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorCode::ParseError, where + "bad integer '" + s + "'");
    if (seen[v]) throw Error(ErrorCode::ParseError, where + "vertex '" + toks[0] + "' listed twice");
    seen[v] = true;
    d[v] = value;
  }
  return d;
}

Divisor load_divisor_file(const Multigraph& g, const std::filesystem::path& path) {
  return parse_divisor(g, read_text_file(path));
}

std::string format_divisor(const Multigraph& g, const Divisor& d) {
  check_divisor(g, d);
  std::string out;
  for (VertexId v : g.lex_order()) out += g.name(v) + " " + std::to_string(d[v]) + "\n";
  return out;
}

}  // namespace orr
