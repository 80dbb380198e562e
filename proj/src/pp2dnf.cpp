#include "stg/pp2dnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stg/errors.hpp"
#include "stg/oracles.hpp"
#include "text_util.hpp"

namespace stg {

void Pp2dnfFormula::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [i, j] : clauses) {
    if (i >= n_x || j >= n_y) {
      throw PreconditionError("clause (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                              ") is out of range");
    }
    if (!seen.insert({i, j}).second) {
      throw PreconditionError("duplicate clause (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    }
  }
}

Pp2dnfFormula parse_pp2dnf(std::string_view text) {
  Pp2dnfFormula f;
  bool header = false;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("formula line " + std::to_string(line_no) + ": " + msg);
  };
  for (std::string_view raw : detail::split(text, '\n')) {
    ++line_no;
    const auto tokens = detail::tokenize(detail::strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens[0] == "pp2dnf") {
      if (header) fail("repeated header");
      if (tokens.size() != 3) fail("expected 'pp2dnf <n_x> <n_y>'");
      const auto nx = detail::parse_uint(tokens[1]);
      const auto ny = detail::parse_uint(tokens[2]);
      if (!nx || !ny) fail("variable counts must be non-negative integers");
      f.n_x = *nx;
      f.n_y = *ny;
      header = true;
    } else if (tokens[0] == "clause") {
      if (!header) fail("clause before the header");
      if (tokens.size() != 3) fail("expected 'clause <i> <j>'");
      const auto i = detail::parse_uint(tokens[1]);
      const auto j = detail::parse_uint(tokens[2]);
      if (!i || !j || *i == 0 || *j == 0) fail("clause indices are 1-based integers");
      if (*i > f.n_x || *j > f.n_y) fail("clause index out of range");
      const std::pair<std::size_t, std::size_t> c{*i - 1, *j - 1};
      if (std::find(f.clauses.begin(), f.clauses.end(), c) != f.clauses.end()) fail("duplicate clause");
      f.clauses.push_back(c);
    } else {
      fail("unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  if (!header) throw ParseError("formula: missing 'pp2dnf <n_x> <n_y>' header");
  return f;
}

std::string to_string(const Pp2dnfFormula& f) {
  std::ostringstream out;
  out << "pp2dnf " << f.n_x << ' ' << f.n_y << '\n';
  for (const auto& [i, j] : f.clauses) out << "clause " << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

std::uint64_t pp2dnf_count(const Pp2dnfFormula& f) {
  f.validate();
  if (f.n_x + f.n_y > 24) {
    throw BudgetExceeded("pp2dnf_count: " + std::to_string(f.n_x + f.n_y) + " variables exceed 24");
  }
  // ys_of[i]: mask of y variables sharing a clause with x_i.
  std::vector<std::uint32_t> ys_of(f.n_x, 0);
  for (const auto& [i, j] : f.clauses) ys_of[i] |= std::uint32_t{1} << j;
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (f.n_x + f.n_y);
  for (std::uint64_t a = 0; a < total; ++a) {
    const std::uint32_t xs = static_cast<std::uint32_t>(a & ((std::uint64_t{1} << f.n_x) - 1));
    const std::uint32_t ys = static_cast<std::uint32_t>(a >> f.n_x);
    for (std::size_t i = 0; i < f.n_x; ++i) {
      if (((xs >> i) & 1U) && (ys_of[i] & ys)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

MinArrivalGadget build_min_arrival_gadget(const Pp2dnfFormula& f, bool directed) {
  f.validate();
  const std::size_t n = 2 + f.n_x + f.n_y + 3;
  MinArrivalGadget g;
  g.graph = StaticGraph(n, directed);
  const VertexId s = 0;
  const VertexId y = 1;
  auto x_vertex = [](std::size_t i) { return 2 + i; };
  auto y_vertex = [&](std::size_t j) { return 2 + f.n_x + j; };
  const VertexId v1 = 2 + f.n_x + f.n_y;
  const Probability half(1, 2);
  auto add = [&](VertexId u, VertexId v, Probability p) {
    g.graph.add_edge(u, v);
    g.probs.push_back(p);
  };
  for (std::size_t i = 0; i < f.n_x; ++i) add(s, x_vertex(i), half);
  for (const auto& [i, j] : f.clauses) add(x_vertex(i), y_vertex(j), Probability::one());
  for (std::size_t j = 0; j < f.n_y; ++j) add(y_vertex(j), y, half);
  add(s, v1, Probability::one());
  add(v1, v1 + 1, Probability::one());
  add(v1 + 1, v1 + 2, Probability::one());
  add(v1 + 2, y, Probability::one());
  g.s = s;
  g.y = y;
  return g;
}

GadgetVerification verify_gadget_identity(const Pp2dnfFormula& f, bool directed, std::size_t max_vertices) {
  const MinArrivalGadget g = build_min_arrival_gadget(f, directed);
  GadgetVerification v;
  v.psi_direct = pp2dnf_count(f);
  v.expectation = exact_min_arrival_memoryless<mpq_class>(g.graph, g.probs, g.s, g.y, max_vertices);
  mpz_class scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(f.n_x + f.n_y);
  v.psi_from_expectation = mpq_class(scale) * (mpq_class(4) - v.expectation);
  v.psi_from_expectation.canonicalize();
  v.integral = v.psi_from_expectation.get_den() == 1;
  v.match = v.integral && v.psi_from_expectation.get_num() == mpz_class(std::to_string(v.psi_direct));
  return v;
}

}  // namespace stg
