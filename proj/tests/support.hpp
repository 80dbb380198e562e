#pragma once

// Seeded instance generators and brute-force reference computations shared
// by the unit tests and the acceptance binary.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "stg/errors.hpp"
#include "stg/graph.hpp"
#include "stg/journey.hpp"
#include "stg/model.hpp"
#include "stg/probability.hpp"
#include "stg/sp_tree.hpp"
#include "stg/trace.hpp"

namespace stg::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// k / 64 with k drawn so that the value lies in [lo, 1]. Dyadic values keep
/// rational arithmetic cheap.
inline Probability dyadic_probability(Rng& rng, double lo) {
  const auto k_lo = static_cast<std::int64_t>(std::ceil(lo * 64.0));
  return Probability(static_cast<std::int64_t>(uniform_int(rng, k_lo, 64)), 64);
}

/// Random SP tree with exactly `leaves` edges and a simple underlying graph.
/// A parallel node whose children both carry a direct terminal-terminal
/// edge would duplicate that edge, so such a draw becomes a series node.
inline SpTree random_sp_tree(Rng& rng, std::size_t leaves, double p_lo) {
  struct Built {
    SpTree tree;
    bool direct;  // has an edge joining its own two terminals
  };
  std::function<Built(std::size_t)> build = [&](std::size_t m) -> Built {
    if (m == 1) return {SpTree::leaf(dyadic_probability(rng, p_lo)), true};
    const std::size_t left = uniform_int(rng, 1, m - 1);
    Built a = build(left);
    Built b = build(m - left);
    const bool parallel = uniform_int(rng, 0, 1) == 1 && !(a.direct && b.direct);
    if (parallel) return {SpTree::parallel(a.tree, b.tree), a.direct || b.direct};
    return {SpTree::series(a.tree, b.tree), false};
  };
  return build(leaves).tree;
}

/// Path 0 - 1 - ... - len with the given probabilities.
inline StaticGraph path_graph(std::size_t len) {
  StaticGraph g(len + 1, false);
  for (VertexId v = 0; v < len; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Undirected 4-cycle a=0, b=1, c=2, d=3 with edges ab, bc, cd, da.
inline StaticGraph cycle4() {
  StaticGraph g(4, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return g;
}

/// Connected random undirected graph: a random spanning tree plus extra
/// edges, each kept with probability `density`.
inline StaticGraph random_connected_graph(Rng& rng, std::size_t n, double density) {
  StaticGraph g(n, false);
  for (VertexId v = 1; v < n; ++v) g.add_edge(uniform_int(rng, 0, v - 1), v);
  std::bernoulli_distribution keep(density);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.find_edge(u, v) && !g.find_edge(v, u) && keep(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<Probability> random_probabilities(Rng& rng, std::size_t m, double p_lo) {
  std::vector<Probability> out;
  for (std::size_t e = 0; e < m; ++e) out.push_back(dyadic_probability(rng, p_lo));
  return out;
}

/// Earliest arrival by enumerating every simple s-y path and walking it
/// greedily (take each edge at its first appearance after the previous
/// hop). Independent of the sweep used by foremost_arrival.
inline std::optional<Time> brute_force_foremost(const TemporalTrace& trace, const StaticGraph& g, VertexId s,
                                                VertexId y) {
  std::optional<Time> best;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::function<void(VertexId, Time)> walk = [&](VertexId v, Time now) {
    if (v == y) {
      if (!best || now < *best) best = now;
      return;
    }
    on_path[v] = true;
    for (const Incidence& inc : g.incident(v)) {
      if (on_path[inc.other]) continue;
      for (Time t = now + 1; t <= trace.horizon(); ++t) {
        if (trace.at(t).contains(inc.edge)) {
          walk(inc.other, t);
          break;
        }
      }
    }
    on_path[v] = false;
  };
  walk(s, 0);
  return best;
}

/// Pr[X(s, y) >= i] for i = 1..horizon by enumerating every snapshot
/// sequence of length i - 1 of a memoryless model (2^{m (i-1)} traces).
inline std::vector<double> brute_force_tail(const StaticGraph& g, const std::vector<Probability>& probs,
                                            VertexId s, VertexId y, std::size_t horizon) {
  const std::size_t m = g.edge_count();
  std::vector<double> tail(horizon, 0.0);
  tail[0] = 1.0;
  for (std::size_t i = 2; i <= horizon; ++i) {
    const std::size_t steps = i - 1;
    const std::uint64_t total = std::uint64_t{1} << (m * steps);
    double not_arrived = 0.0;
    for (std::uint64_t code = 0; code < total; ++code) {
      double prob = 1.0;
      std::vector<EdgeSet> snaps;
      for (std::size_t t = 0; t < steps; ++t) {
        const std::uint64_t mask = (code >> (m * t)) & ((std::uint64_t{1} << m) - 1);
        snaps.push_back(EdgeSet::from_mask(m, mask));
        for (EdgeId e = 0; e < m; ++e) {
          const double p = probs[e].to_double();
          prob *= ((mask >> e) & 1U) ? p : 1.0 - p;
        }
      }
      const TemporalTrace trace(m, snaps);
      if (!brute_force_foremost(trace, g, s, y)) not_arrived += prob;
    }
    tail[i - 1] = not_arrived;
  }
  return tail;
}

}  // namespace stg::testing
