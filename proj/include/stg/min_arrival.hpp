#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stg/probability.hpp"
#include "stg/sp_tree.hpp"

namespace stg {

/// Truncated law of an arrival time X over horizon ell:
/// geq[i-1] = Pr[X >= i] for i = 1..ell, eq[i-1] = Pr[X = i] for i = 1..ell-1.
template <class Scalar>
struct ArrivalDistribution {
  std::size_t horizon = 0;
  std::vector<Scalar> geq;
  std::vector<Scalar> eq;

  Scalar geq_at(std::size_t i) const { return geq.at(i - 1); }
  Scalar eq_at(std::size_t i) const { return eq.at(i - 1); }

  /// sum_{i=1}^{ell} Pr[X >= i].
  Scalar truncated_expectation() const;

  /// Columns i, geq, eq (eq empty on the last row).
  std::string to_csv() const;
};

/// Throws InvariantViolation unless geq[1] = 1, geq is non-increasing,
/// every entry lies in [0,1] and eq[i] = geq[i] - geq[i+1]. `tolerance` is
/// the slack for floating-point scalars; rational scalars are checked
/// exactly.
template <class Scalar>
void check_distribution(const ArrivalDistribution<Scalar>& d, double tolerance = 1e-12);

/// Expected arrival on a path: sum of 1/p_e. Throws InfiniteExpectation
/// when some p_e is 0.
template <class Scalar>
Scalar path_expectation(std::span<const Probability> probs);

/// tau = ceil(w * (ln(w / eps) + 1)) for w >= 1, eps in (0, 1].
std::int64_t truncation_horizon(double min_weight, double eps);

/// Arrival distribution of the SP graph between its root terminals.
///
/// Leaves use the geometric mass (1-p)^{i-1} p; a parallel node multiplies
/// its children's tails Pr[X >= i]; a series node convolves their masses
/// Pr[X = i]. Each node then fills in its other representation. O(m ell^2).
template <class Scalar>
ArrivalDistribution<Scalar> sp_arrival_distribution(const SpTree& tree, std::size_t horizon);

template <class Scalar>
struct FptasResult {
  Scalar estimate;
  double min_weight = 0.0;  // w*
  std::int64_t horizon = 0;  // tau
  ArrivalDistribution<Scalar> distribution;
};

/// Additive-eps approximation of E[X(s, y)] on a memoryless SP graph:
/// E[X] - eps < estimate <= E[X]. Requires every p_e in (0, 1].
template <class Scalar>
FptasResult<Scalar> fptas_series_parallel(const SpTree& tree, double eps);

}  // namespace stg
