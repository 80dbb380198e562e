#include "stg/trace.hpp"

#include <sstream>

#include "stg/errors.hpp"
#include "text_util.hpp"

namespace stg {

TemporalTrace::TemporalTrace(std::size_t edge_count, std::vector<EdgeSet> snapshots)
    : edge_count_(edge_count), snapshots_(std::move(snapshots)) {
  for (const EdgeSet& s : snapshots_) {
    if (s.capacity() != edge_count_) throw PreconditionError("snapshot size does not match edge count");
  }
}

TemporalTrace sample_trace(const StochasticModel& model, const ModelState& initial, Time horizon,
                           std::uint64_t seed) {
  CounterRng rng(seed);
  ModelState state = initial;
  std::vector<EdgeSet> snapshots;
  snapshots.reserve(horizon);
  for (Time t = 1; t <= horizon; ++t) {
    EdgeSet snapshot = model.draw_snapshot(state, rng);
    state.advance(snapshot);
    snapshots.push_back(std::move(snapshot));
  }
  return TemporalTrace(model.graph().edge_count(), std::move(snapshots));
}

std::string to_string(const TemporalTrace& trace) {
  std::ostringstream out;
  out << "trace " << trace.horizon() << ' ' << trace.edge_count() << '\n';
  for (Time t = 1; t <= trace.horizon(); ++t) {
    out << t << ':';
    trace.at(t).for_each([&](EdgeId e) { out << ' ' << e; });
    out << '\n';
  }
  return out.str();
}

TemporalTrace parse_trace(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  Time horizon = 0;
  std::size_t m = 0;
  std::vector<EdgeSet> snapshots;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("trace line " + std::to_string(line_no) + ": " + msg);
  };
  for (std::string_view raw : detail::split(text, '\n')) {
    ++line_no;
    const auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    if (!have_header) {
      const auto tokens = detail::tokenize(line);
      if (tokens.size() != 3 || tokens[0] != "trace") fail("expected: trace <T> <m>");
      const auto t = detail::parse_uint(tokens[1]);
      const auto edges = detail::parse_uint(tokens[2]);
      if (!t || !edges) fail("bad header numbers");
      horizon = *t;
      m = *edges;
      have_header = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected `t: edges...`");
    const auto t = detail::parse_uint(detail::trim(line.substr(0, colon)));
    if (!t || *t != snapshots.size() + 1) fail("time steps must be listed as 1, 2, ..., T");
    EdgeSet snapshot(m);
    for (auto tok : detail::tokenize(line.substr(colon + 1))) {
      const auto e = detail::parse_uint(tok);
      if (!e || *e >= m) fail("edge id out of range");
      snapshot.insert(*e);
    }
    snapshots.push_back(std::move(snapshot));
  }
  if (!have_header) throw ParseError("trace: missing header");
  if (snapshots.size() != horizon) {
    throw ParseError("trace declares " + std::to_string(horizon) + " steps but lists " +
                     std::to_string(snapshots.size()));
  }
  return TemporalTrace(m, std::move(snapshots));
}

}  // namespace stg
