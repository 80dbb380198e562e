#include "stg/oracles.hpp"

#include <cmath>
#include <optional>
#include <vector>

#include "stg/errors.hpp"

namespace stg {

namespace {

void check_terminals(const StaticGraph& graph, VertexId s, VertexId y) {
  if (s >= graph.vertex_count() || y >= graph.vertex_count()) {
    throw PreconditionError("terminal outside the vertex range");
  }
  if (s == y) throw PreconditionError("minimum arrival needs distinct terminals");
}

}  // namespace

template <class Scalar>
Scalar exact_min_arrival_memoryless(const StaticGraph& graph, std::span<const Probability> probs,
                                    VertexId s, VertexId y, std::size_t max_vertices) {
  check_terminals(graph, s, y);
  const std::size_t n = graph.vertex_count();
  if (n > max_vertices || n > 30) {
    throw BudgetExceeded("informed-set oracle: " + std::to_string(n) + " vertices exceed the budget of " +
                         std::to_string(max_vertices));
  }
  if (probs.size() != graph.edge_count()) throw PreconditionError("one probability per edge expected");

  std::vector<Scalar> miss(probs.size());
  for (std::size_t e = 0; e < probs.size(); ++e) miss[e] = to_scalar<Scalar>(probs[e].complement());

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::uint32_t sbit = std::uint32_t{1} << s;
  const std::uint32_t ybit = std::uint32_t{1} << y;
  // nullopt marks an infinite hitting time.
  std::vector<std::optional<Scalar>> value(std::size_t{full} + 1);

  std::vector<VertexId> boundary;
  std::vector<Scalar> inform;  // per boundary vertex
  std::vector<Scalar> stay;

  for (std::uint32_t mask = full;; --mask) {
    if ((mask & sbit) != 0) {
      if ((mask & ybit) != 0) {
        value[mask] = Scalar(0);
      } else {
        boundary.clear();
        stay.clear();
        for (VertexId u = 0; u < n; ++u) {
          if (((mask >> u) & 1U) == 0) continue;
          for (const Incidence& inc : graph.incident(u)) {
            if ((mask >> inc.other) & 1U) continue;
            if (probs[inc.edge].is_zero()) continue;
            std::size_t slot = 0;
            while (slot < boundary.size() && boundary[slot] != inc.other) ++slot;
            if (slot == boundary.size()) {
              boundary.push_back(inc.other);
              stay.push_back(Scalar(1));
            }
            stay[slot] *= miss[inc.edge];
          }
        }
        inform.resize(boundary.size());
        Scalar stuck = 1;
        for (std::size_t i = 0; i < boundary.size(); ++i) {
          inform[i] = Scalar(1) - stay[i];
          stuck *= stay[i];
        }
        if (stuck == 1) {
          value[mask] = std::nullopt;
        } else {
          // Sum over non-empty subsets T of the boundary: P(T) E[S u T].
          Scalar acc = 0;
          bool infinite = false;
          auto visit = [&](auto&& self, std::size_t i, std::uint32_t added, const Scalar& prob) -> void {
            if (infinite || prob == 0) return;
            if (i == boundary.size()) {
              if (added == 0) return;
              const auto& next = value[mask | added];
              if (!next) {
                infinite = true;
                return;
              }
              acc += prob * *next;
              return;
            }
            self(self, i + 1, added | (std::uint32_t{1} << boundary[i]), prob * inform[i]);
            self(self, i + 1, added, prob * stay[i]);
          };
          visit(visit, 0, 0, Scalar(1));
          if (infinite) {
            value[mask] = std::nullopt;
          } else {
            value[mask] = (Scalar(1) + acc) / (Scalar(1) - stuck);
          }
        }
      }
    }
    if (mask == 0) break;
  }
  if (!value[sbit]) {
    throw InfiniteExpectation("target " + std::to_string(y) + " is unreachable from " + std::to_string(s) +
                              " through positive-probability edges");
  }
  return *value[sbit];
}

template double exact_min_arrival_memoryless<double>(const StaticGraph&, std::span<const Probability>, VertexId,
                                                     VertexId, std::size_t);
template mpq_class exact_min_arrival_memoryless<mpq_class>(const StaticGraph&, std::span<const Probability>,
                                                           VertexId, VertexId, std::size_t);

MemoryKOracleResult exact_min_arrival_memory_k(const StochasticModel& model, VertexId s, VertexId y,
                                               double eps_tail, std::uint64_t max_states) {
  const StaticGraph& graph = model.graph();
  check_terminals(graph, s, y);
  if (!(eps_tail > 0.0)) throw PreconditionError("eps_tail must be positive");
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  const unsigned k = model.memory();
  if (n > 30 || m > 20 || static_cast<std::uint64_t>(k) * m > 20) {
    throw BudgetExceeded("memory-k oracle: instance too large for dense state arrays");
  }
  const std::uint64_t sets = std::uint64_t{1} << n;
  const std::uint64_t histories = std::uint64_t{1} << (k * m);
  const std::uint64_t snapshots = std::uint64_t{1} << m;
  if (sets * histories > max_states || histories * snapshots > max_states || sets * snapshots > max_states) {
    throw BudgetExceeded("memory-k oracle: " + std::to_string(sets) + " informed sets x " +
                         std::to_string(histories) + " histories exceed the budget of " +
                         std::to_string(max_states));
  }
  const double p_min = model.min_appearance_prob();
  if (!(p_min > 0.0)) {
    throw PreconditionError("memory-k oracle needs every appearance probability > 0");
  }

  // Per history: successor history and probability of each snapshot.
  std::vector<double> mu(histories * snapshots);
  std::vector<std::uint32_t> next_history(histories * snapshots);
  for (std::uint64_t h = 0; h < histories; ++h) {
    const ModelState state = ModelState::from_index(k, m, h);
    for (std::uint64_t g = 0; g < snapshots; ++g) {
      const EdgeSet snap = EdgeSet::from_mask(m, g);
      ModelState after = state;
      after.advance(snap);
      mu[h * snapshots + g] = model.snapshot_transition_prob(state, snap);
      next_history[h * snapshots + g] = static_cast<std::uint32_t>(after.index());
    }
  }

  // One-step flooding: informed set after snapshot g, cached lazily.
  std::vector<std::uint32_t> spread(sets * snapshots, 0);
  std::vector<bool> spread_known(sets * snapshots, false);
  auto flood = [&](std::uint32_t informed, std::uint64_t g) {
    const std::uint64_t slot = informed * snapshots + g;
    if (!spread_known[slot]) {
      std::uint32_t out = informed;
      for (VertexId u = 0; u < n; ++u) {
        if (((informed >> u) & 1U) == 0) continue;
        for (const Incidence& inc : graph.incident(u)) {
          if ((g >> inc.edge) & 1U) out |= std::uint32_t{1} << inc.other;
        }
      }
      spread[slot] = out;
      spread_known[slot] = true;
    }
    return spread[slot];
  };

  const std::uint32_t ybit = std::uint32_t{1} << y;
  std::vector<double> mass(sets * histories, 0.0);
  std::vector<double> next(sets * histories, 0.0);
  mass[(std::uint64_t{1} << s) * histories + model.initial_state().index()] = 1.0;

  MemoryKOracleResult result;
  const double horizon_bound = static_cast<double>(n - 1) / p_min;
  double alive = 1.0;  // Pr[X > t]
  for (;;) {
    result.expectation += alive;  // adds Pr[X >= t + 1]
    std::fill(next.begin(), next.end(), 0.0);
    for (std::uint64_t informed = 0; informed < sets; ++informed) {
      for (std::uint64_t h = 0; h < histories; ++h) {
        const double w = mass[informed * histories + h];
        if (w == 0.0) continue;
        for (std::uint64_t g = 0; g < snapshots; ++g) {
          const double pg = mu[h * snapshots + g];
          if (pg == 0.0) continue;
          const std::uint32_t after = flood(static_cast<std::uint32_t>(informed), g);
          if (after & ybit) continue;
          next[std::uint64_t{after} * histories + next_history[h * snapshots + g]] += w * pg;
        }
      }
    }
    mass.swap(next);
    ++result.steps;
    alive = 0.0;
    for (double w : mass) alive += w;
    if (alive * horizon_bound < eps_tail) break;
    if (result.steps > 100'000'000) throw NonConvergence("memory-k oracle: residual mass does not vanish");
  }
  result.residual_mass = alive;
  result.tail_bound = alive * horizon_bound;
  return result;
}

}  // namespace stg
