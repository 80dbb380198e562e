#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stg/best_policy.hpp"
#include "stg/model.hpp"

namespace stg {

/// Best-policy decision process of a memory-k model: states (a, H), unit
/// cost per day, and after the next snapshot G is drawn from mu(G | H) the
/// agent moves to any vertex of the closed neighborhood Gamma_G[a].
class PolicyMdp {
 public:
  struct Transition {
    std::uint64_t snapshot;      // edge mask of G
    double prob;                 // mu(G | H) > 0
    std::uint64_t next_history;  // index of H advanced by G
  };

  /// Throws BudgetExceeded when n * 2^{km} or 2^{km} * 2^m exceeds
  /// max_states.
  PolicyMdp(const StochasticModel& model, VertexId target, std::uint64_t max_states = 1u << 22);

  const StochasticModel& model() const noexcept { return *model_; }
  VertexId target() const noexcept { return y_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::uint64_t history_count() const noexcept { return histories_; }
  std::span<const Transition> transitions(std::uint64_t history) const {
    return std::span<const Transition>(transitions_).subspan(offsets_[history],
                                                             offsets_[history + 1] - offsets_[history]);
  }

  /// Closed neighborhood of a in the snapshot with edge mask `snapshot`.
  template <class F>
  void for_each_move(VertexId a, std::uint64_t snapshot, F&& f) const {
    f(a);
    for (const Incidence& inc : model_->graph().incident(a)) {
      if ((snapshot >> inc.edge) & 1U) f(inc.other);
    }
  }

  /// reachable[H * n + a]: y is reached from (a, H) with positive
  /// probability under some policy.
  std::vector<bool> target_reachable() const;

  HTable blank_table() const;

 private:
  const StochasticModel* model_;
  VertexId y_;
  std::size_t n_;
  std::uint64_t histories_;
  std::vector<std::size_t> offsets_;
  std::vector<Transition> transitions_;
};

/// One Jacobi sweep of the recurrence
///
///     h'(a, H) = 1 + sum_G mu(G | H) min_{u in Gamma_G[a]} h(u, H + G),
///     h'(y, H) = 0.
///
/// Returns the sup-norm change.
double value_iteration_step(const PolicyMdp& mdp, const HTable& in, HTable& out);

struct ValueIterationOptions {
  double tol = 1e-12;
  std::uint64_t max_iters = 1'000'000;
  std::uint64_t max_states = 1u << 22;
};

struct ValueIterationResult {
  HTable table;
  std::uint64_t iterations = 0;
  double last_change = 0.0;
};

/// Iterates value_iteration_step from h = 0 until the change drops below
/// tol. Throws PreconditionError when some state cannot reach y,
/// NonConvergence after max_iters sweeps, BudgetExceeded as PolicyMdp.
ValueIterationResult value_iterate(const StochasticModel& model, VertexId y,
                                   const ValueIterationOptions& options = {});

/// A non-terminal state (a, H) with a != y.
struct Triplet {
  VertexId vertex;
  std::uint64_t history;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct OrderingCertificate {
  std::vector<Triplet> order;         // sigma over non-terminal states; y-states precede all
  std::uint64_t orderings_tried = 0;  // including the accepted one
  double max_equality_residual = 0.0;
  bool min_consistent = false;  // every chosen move attains the closed-neighborhood minimum
  bool nonnegative = false;     // every h >= 0
};

struct OrderingResult {
  HTable table;
  OrderingCertificate certificate;
};

/// Enumerates orderings sigma of the non-terminal states in lexicographic
/// order. For each, the move from (a, H) under G is the sigma-earliest
/// vertex of Gamma_G[a] (y first), which turns the recurrence into a linear
/// system solved by Gaussian elimination with partial pivoting. The first
/// solution whose moves attain the minimum (tolerance 1e-9) and whose
/// values are non-negative is returned. Throws BudgetExceeded when more
/// than `budget` non-terminal states exist and InvariantViolation if no
/// ordering is consistent.
OrderingResult exact_ordering_solver(const StochasticModel& model, VertexId y, std::size_t budget = 6);

}  // namespace stg
