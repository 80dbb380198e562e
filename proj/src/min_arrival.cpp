#include "stg/min_arrival.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <type_traits>

#include "stg/errors.hpp"
#include "stg/shortest_path.hpp"

namespace stg {

template <class Scalar>
Scalar ArrivalDistribution<Scalar>::truncated_expectation() const {
  Scalar sum = 0;
  for (const Scalar& g : geq) sum += g;
  return sum;
}

template <class Scalar>
std::string ArrivalDistribution<Scalar>::to_csv() const {
  std::ostringstream out;
  out << "i,geq,eq\n";
  char buf[64];
  for (std::size_t i = 1; i <= horizon; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", to_double(geq[i - 1]));
    out << i << ',' << buf << ',';
    if (i < horizon) {
      std::snprintf(buf, sizeof buf, "%.17g", to_double(eq[i - 1]));
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

template <class Scalar>
void check_distribution(const ArrivalDistribution<Scalar>& d, double tolerance) {
  constexpr bool exact = !std::is_floating_point_v<Scalar>;
  const double tol = exact ? 0.0 : tolerance;
  auto fail = [](const std::string& what, std::size_t i) {
    throw InvariantViolation("arrival distribution: " + what + " at i=" + std::to_string(i));
  };
  if (d.geq.size() != d.horizon || d.eq.size() + 1 != std::max<std::size_t>(d.horizon, 1)) {
    throw InvariantViolation("arrival distribution: vector sizes disagree with the horizon");
  }
  if (d.horizon == 0) return;
  if constexpr (exact) {
    if (d.geq[0] != 1) fail("Pr[X >= 1] != 1", 1);
  } else {
    if (std::abs(d.geq[0] - 1.0) > tol) fail("Pr[X >= 1] != 1", 1);
  }
  for (std::size_t i = 0; i < d.horizon; ++i) {
    if (d.geq[i] < -tol || d.geq[i] > 1 + tol) fail("Pr[X >= i] outside [0,1]", i + 1);
    if (i + 1 < d.horizon) {
      if (d.geq[i + 1] > d.geq[i] + tol) fail("Pr[X >= i] increases", i + 2);
      if (d.eq[i] < -tol || d.eq[i] > 1 + tol) fail("Pr[X = i] outside [0,1]", i + 1);
      const Scalar diff = d.geq[i] - d.geq[i + 1] - d.eq[i];
      if constexpr (exact) {
        if (diff != 0) fail("Pr[X = i] != Pr[X >= i] - Pr[X >= i+1]", i + 1);
      } else {
        if (std::abs(diff) > tol) fail("Pr[X = i] != Pr[X >= i] - Pr[X >= i+1]", i + 1);
      }
    }
  }
}

template <class Scalar>
Scalar path_expectation(std::span<const Probability> probs) {
  Scalar sum = 0;
  for (const Probability& p : probs) {
    if (p.is_zero()) throw InfiniteExpectation("edge with p = 0 on the path never appears");
    sum += Scalar(1) / to_scalar<Scalar>(p);
  }
  return sum;
}

std::int64_t truncation_horizon(double min_weight, double eps) {
  if (!(min_weight >= 1.0) || !std::isfinite(min_weight)) {
    throw PreconditionError("truncation horizon needs a finite weight >= 1");
  }
  if (!(eps > 0.0 && eps <= 1.0)) throw PreconditionError("eps must lie in (0, 1]");
  const long double w = min_weight;
  const long double tau = w * (std::log(w / static_cast<long double>(eps)) + 1.0L);
  return static_cast<std::int64_t>(std::ceil(tau));
}

namespace {

template <class Scalar>
ArrivalDistribution<Scalar> leaf_distribution(const Probability& prob, std::size_t ell) {
  ArrivalDistribution<Scalar> d;
  d.horizon = ell;
  d.geq.resize(ell);
  d.eq.resize(ell > 0 ? ell - 1 : 0);
  const Scalar p = to_scalar<Scalar>(prob);
  const Scalar miss = Scalar(1) - p;
  Scalar tail = 1;  // (1-p)^{i-1}
  for (std::size_t i = 0; i < ell; ++i) {
    d.geq[i] = tail;
    if (i + 1 < ell) d.eq[i] = tail * p;
    tail *= miss;
  }
  return d;
}

// min(X1, X2): tails multiply; the mass is written as
// Pr[X1 = i, X2 >= i] + Pr[X1 > i, X2 = i] so no cancellation occurs.
template <class Scalar>
ArrivalDistribution<Scalar> parallel_distribution(const ArrivalDistribution<Scalar>& a,
                                                  const ArrivalDistribution<Scalar>& b) {
  const std::size_t ell = a.horizon;
  ArrivalDistribution<Scalar> d;
  d.horizon = ell;
  d.geq.resize(ell);
  d.eq.resize(ell > 0 ? ell - 1 : 0);
  for (std::size_t i = 0; i < ell; ++i) d.geq[i] = a.geq[i] * b.geq[i];
  for (std::size_t i = 0; i + 1 < ell; ++i) d.eq[i] = a.eq[i] * b.geq[i] + a.geq[i + 1] * b.eq[i];
  return d;
}

// X1 + X2: masses convolve; the tail is Pr[X1 >= i] + sum_j Pr[X1 = j] Pr[X2 >= i-j].
template <class Scalar>
ArrivalDistribution<Scalar> series_distribution(const ArrivalDistribution<Scalar>& a,
                                                const ArrivalDistribution<Scalar>& b) {
  const std::size_t ell = a.horizon;
  ArrivalDistribution<Scalar> d;
  d.horizon = ell;
  d.geq.resize(ell);
  d.eq.resize(ell > 0 ? ell - 1 : 0);
  // 1-based: eq[i] = sum_{j=1}^{i-1} eq1[j] eq2[i-j].
  for (std::size_t i = 2; i < ell; ++i) {
    Scalar acc = 0;
    for (std::size_t j = 1; j < i; ++j) acc += a.eq[j - 1] * b.eq[i - j - 1];
    d.eq[i - 1] = acc;
  }
  for (std::size_t i = 1; i <= ell; ++i) {
    Scalar acc = a.geq[i - 1];
    for (std::size_t j = 1; j < i; ++j) acc += a.eq[j - 1] * b.geq[i - j - 1];
    d.geq[i - 1] = acc;
  }
  return d;
}

}  // namespace

template <class Scalar>
ArrivalDistribution<Scalar> sp_arrival_distribution(const SpTree& tree, std::size_t horizon) {
  if (horizon == 0) throw PreconditionError("arrival distribution needs a horizon >= 1");
  const auto& nodes = tree.nodes();
  std::vector<ArrivalDistribution<Scalar>> dist(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const SpNode& node = nodes[i];
    switch (node.kind) {
      case SpKind::Leaf:
        if (node.p.is_zero()) throw PreconditionError("SP leaf with p = 0");
        dist[i] = leaf_distribution<Scalar>(node.p, horizon);
        break;
      case SpKind::Parallel:
        dist[i] = parallel_distribution(dist[node.left], dist[node.right]);
        break;
      case SpKind::Series:
        dist[i] = series_distribution(dist[node.left], dist[node.right]);
        break;
    }
    check_distribution(dist[i], 1e-9);
    if (node.kind != SpKind::Leaf) {
      dist[node.left] = {};
      dist[node.right] = {};
    }
  }
  return std::move(dist.back());
}

template <class Scalar>
FptasResult<Scalar> fptas_series_parallel(const SpTree& tree, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw PreconditionError("eps must lie in (0, 1]");
  const std::vector<Probability> probs = tree.edge_probabilities();
  for (const Probability& p : probs) {
    if (p.is_zero()) throw PreconditionError("FPTAS requires every edge probability > 0");
  }
  const StaticGraph graph = tree.underlying_graph();
  const WeightedGraph weighted(graph, std::span<const Probability>(probs));
  const WeightedPath path = min_weight_path(weighted, tree.source(), tree.sink());

  FptasResult<Scalar> result;
  result.min_weight = path.weight;
  result.horizon = truncation_horizon(path.weight, eps);
  result.distribution = sp_arrival_distribution<Scalar>(tree, static_cast<std::size_t>(result.horizon));
  result.estimate = result.distribution.truncated_expectation();
  return result;
}

#define STG_INSTANTIATE(Scalar)                                                                    \
  template struct ArrivalDistribution<Scalar>;                                                     \
  template void check_distribution<Scalar>(const ArrivalDistribution<Scalar>&, double);           \
  template Scalar path_expectation<Scalar>(std::span<const Probability>);                          \
  template ArrivalDistribution<Scalar> sp_arrival_distribution<Scalar>(const SpTree&, std::size_t); \
  template FptasResult<Scalar> fptas_series_parallel<Scalar>(const SpTree&, double);

STG_INSTANTIATE(double)
STG_INSTANTIATE(mpq_class)

#undef STG_INSTANTIATE

}  // namespace stg
