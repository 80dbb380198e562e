#include "stg/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "stg/errors.hpp"

namespace stg {

PolicyMdp::PolicyMdp(const StochasticModel& model, VertexId target, std::uint64_t max_states)
    : model_(&model), y_(target), n_(model.graph().vertex_count()) {
  if (y_ >= n_) throw PreconditionError("target outside the vertex range");
  const std::size_t m = model.graph().edge_count();
  const unsigned k = model.memory();
  if (m > 24 || static_cast<std::uint64_t>(k) * m > 24) {
    throw BudgetExceeded("policy MDP: " + std::to_string(m) + " edges with memory " + std::to_string(k) +
                         " are too many to enumerate snapshots and histories");
  }
  histories_ = std::uint64_t{1} << (k * m);
  const std::uint64_t snapshots = std::uint64_t{1} << m;
  if (histories_ * n_ > max_states || histories_ * snapshots > max_states) {
    throw BudgetExceeded("policy MDP: " + std::to_string(n_) + " vertices x " + std::to_string(histories_) +
                         " histories x " + std::to_string(snapshots) + " snapshots exceed the budget of " +
                         std::to_string(max_states));
  }
  offsets_.reserve(histories_ + 1);
  offsets_.push_back(0);
  for (std::uint64_t h = 0; h < histories_; ++h) {
    const ModelState state = ModelState::from_index(k, m, h);
    for (std::uint64_t g = 0; g < snapshots; ++g) {
      const EdgeSet snap = EdgeSet::from_mask(m, g);
      const double prob = model.snapshot_transition_prob(state, snap);
      if (prob == 0.0) continue;
      ModelState after = state;
      after.advance(snap);
      transitions_.push_back({g, prob, after.index()});
    }
    offsets_.push_back(transitions_.size());
  }
}

std::vector<bool> PolicyMdp::target_reachable() const {
  std::vector<bool> good(histories_ * n_, false);
  for (std::uint64_t h = 0; h < histories_; ++h) good[h * n_ + y_] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint64_t h = 0; h < histories_; ++h) {
      for (VertexId a = 0; a < n_; ++a) {
        if (good[h * n_ + a]) continue;
        bool reach = false;
        for (const Transition& t : transitions(h)) {
          for_each_move(a, t.snapshot, [&](VertexId u) { reach = reach || good[t.next_history * n_ + u]; });
          if (reach) break;
        }
        if (reach) {
          good[h * n_ + a] = true;
          changed = true;
        }
      }
    }
  }
  return good;
}

HTable PolicyMdp::blank_table() const {
  return HTable(n_, model_->memory(), model_->graph().edge_count(), y_);
}

double value_iteration_step(const PolicyMdp& mdp, const HTable& in, HTable& out) {
  const std::size_t n = mdp.vertex_count();
  const VertexId y = mdp.target();
  double change = 0.0;
  for (std::uint64_t h = 0; h < mdp.history_count(); ++h) {
    for (VertexId a = 0; a < n; ++a) {
      double value = 0.0;
      if (a != y) {
        value = 1.0;
        for (const PolicyMdp::Transition& t : mdp.transitions(h)) {
          double best = std::numeric_limits<double>::infinity();
          mdp.for_each_move(a, t.snapshot, [&](VertexId u) { best = std::min(best, in.at(u, t.next_history)); });
          value += t.prob * best;
        }
      }
      change = std::max(change, std::abs(value - in.at(a, h)));
      out.at(a, h) = value;
    }
  }
  return change;
}

ValueIterationResult value_iterate(const StochasticModel& model, VertexId y, const ValueIterationOptions& options) {
  const PolicyMdp mdp(model, y, options.max_states);
  const std::vector<bool> good = mdp.target_reachable();
  const std::size_t n = mdp.vertex_count();
  for (std::size_t i = 0; i < good.size(); ++i) {
    if (!good[i]) {
      const ModelState state = ModelState::from_index(model.memory(), model.graph().edge_count(), i / n);
      throw PreconditionError("value iteration: target " + std::to_string(y) + " is unreachable from vertex " +
                              std::to_string(i % n) + " with history " + state.to_string());
    }
  }
  ValueIterationResult result;
  result.table = mdp.blank_table();
  HTable scratch = mdp.blank_table();
  for (;;) {
    if (result.iterations >= options.max_iters) {
      throw NonConvergence("value iteration: no convergence after " + std::to_string(options.max_iters) +
                           " sweeps (last change " + std::to_string(result.last_change) + ")");
    }
    result.last_change = value_iteration_step(mdp, result.table, scratch);
    std::swap(result.table, scratch);
    ++result.iterations;
    if (result.last_change < options.tol) break;
  }
  return result;
}

namespace {

// Solves a x = b in place; false when a pivot vanishes.
bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * b[c];
    b[i] = acc / a[i][i];
  }
  return true;
}

}  // namespace

OrderingResult exact_ordering_solver(const StochasticModel& model, VertexId y, std::size_t budget) {
  const PolicyMdp mdp(model, y);
  const std::size_t n = mdp.vertex_count();
  const std::uint64_t histories = mdp.history_count();
  const std::uint64_t count = (n - 1) * histories;
  if (count > budget) {
    throw BudgetExceeded("ordering solver: " + std::to_string(count) + " non-terminal states exceed the budget of " +
                         std::to_string(budget));
  }

  // Variables: non-terminal states in (vertex, history) order.
  std::vector<Triplet> triplets;
  std::vector<std::size_t> var(histories * n, 0);
  for (VertexId a = 0; a < n; ++a) {
    if (a == y) continue;
    for (std::uint64_t h = 0; h < histories; ++h) {
      var[h * n + a] = triplets.size();
      triplets.push_back({a, h});
    }
  }
  const std::size_t nv = triplets.size();
  constexpr double kTol = 1e-9;

  std::vector<std::size_t> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> rank(nv);
  std::uint64_t tried = 0;
  do {
    ++tried;
    for (std::size_t pos = 0; pos < nv; ++pos) rank[perm[pos]] = pos;
    // Rank of state (u, H); y-states come first.
    auto state_rank = [&](VertexId u, std::uint64_t h) -> std::size_t {
      return u == y ? 0 : 1 + rank[var[h * n + u]];
    };
    auto chosen_move = [&](VertexId a, const PolicyMdp::Transition& t) {
      VertexId best = a;
      mdp.for_each_move(a, t.snapshot, [&](VertexId u) {
        if (state_rank(u, t.next_history) < state_rank(best, t.next_history)) best = u;
      });
      return best;
    };

    std::vector<std::vector<double>> mat(nv, std::vector<double>(nv, 0.0));
    std::vector<double> rhs(nv, 1.0);
    for (std::size_t i = 0; i < nv; ++i) {
      const auto [a, h] = triplets[i];
      mat[i][i] += 1.0;
      for (const PolicyMdp::Transition& t : mdp.transitions(h)) {
        const VertexId u = chosen_move(a, t);
        if (u != y) mat[i][var[t.next_history * n + u]] -= t.prob;
      }
    }
    std::vector<std::vector<double>> mat_copy = mat;
    std::vector<double> sol = rhs;
    if (!solve_dense(mat_copy, sol)) continue;

    auto value = [&](VertexId u, std::uint64_t h) { return u == y ? 0.0 : sol[var[h * n + u]]; };
    bool nonnegative = std::all_of(sol.begin(), sol.end(), [&](double v) { return v >= -kTol; });
    bool min_consistent = true;
    double residual = 0.0;
    for (std::size_t i = 0; i < nv && min_consistent; ++i) {
      const auto [a, h] = triplets[i];
      double rebuilt = 1.0;
      for (const PolicyMdp::Transition& t : mdp.transitions(h)) {
        const double chosen = value(chosen_move(a, t), t.next_history);
        rebuilt += t.prob * chosen;
        mdp.for_each_move(a, t.snapshot, [&](VertexId u) {
          if (chosen > value(u, t.next_history) + kTol) min_consistent = false;
        });
      }
      residual = std::max(residual, std::abs(rebuilt - sol[i]));
    }
    if (!nonnegative || !min_consistent) continue;

    OrderingResult result;
    result.table = mdp.blank_table();
    for (std::size_t i = 0; i < nv; ++i) result.table.at(triplets[i].vertex, triplets[i].history) = sol[i];
    for (std::size_t pos = 0; pos < nv; ++pos) result.certificate.order.push_back(triplets[perm[pos]]);
    result.certificate.orderings_tried = tried;
    result.certificate.max_equality_residual = residual;
    result.certificate.min_consistent = true;
    result.certificate.nonnegative = true;
    return result;
  } while (std::next_permutation(perm.begin(), perm.end()));

  throw InvariantViolation("ordering solver: no ordering yields a consistent solution");
}

}  // namespace stg
