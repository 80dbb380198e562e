#include "stg/best_policy.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

template <class Scalar>
HValuesMemoryless<Scalar> memoryless_h_values(const StaticGraph& graph, std::span<const Probability> probs,
                                               VertexId y) {
  if (graph.directed()) throw PreconditionError("memoryless best policy requires an undirected graph");
  if (probs.size() != graph.edge_count()) throw PreconditionError("one probability per edge expected");
  const std::size_t n = graph.vertex_count();
  if (y >= n) throw PreconditionError("target outside the vertex range");

  HValuesMemoryless<Scalar> out;
  out.target = y;
  out.h.assign(n, std::nullopt);

  std::vector<bool> listed(n, false);
  std::vector<Scalar> miss(n, Scalar(1));  // Q_u
  std::vector<Scalar> num(n, Scalar(0));   // sum_j Q_{u,j} h(L_j)

  auto admit = [&](VertexId u, const Scalar& hu) {
    listed[u] = true;
    out.order.push_back(u);
    out.h[u] = hu;
    for (const Incidence& inc : graph.incident(u)) {
      const VertexId w = inc.other;
      if (listed[w] || probs[inc.edge].is_zero()) continue;
      const Scalar p = to_scalar<Scalar>(probs[inc.edge]);
      num[w] += miss[w] * p * hu;
      miss[w] *= Scalar(1) - p;
    }
  };

  admit(y, Scalar(0));
  for (std::size_t round = 1; round < n; ++round) {
    std::optional<VertexId> best;
    Scalar best_h = 0;
    for (VertexId u = 0; u < n; ++u) {
      if (listed[u] || miss[u] == 1) continue;
      const Scalar hu = (num[u] + 1) / (Scalar(1) - miss[u]);
      if (!best || hu < best_h) {
        best = u;
        best_h = hu;
      }
    }
    if (!best) break;
    admit(*best, best_h);
  }
  return out;
}

template HValuesMemoryless<double> memoryless_h_values<double>(const StaticGraph&, std::span<const Probability>,
                                                              VertexId);
template HValuesMemoryless<mpq_class> memoryless_h_values<mpq_class>(const StaticGraph&,
                                                                    std::span<const Probability>, VertexId);

HTable::HTable(std::size_t vertex_count, unsigned memory, std::size_t edge_count, VertexId target)
    : n_(vertex_count), k_(memory), m_(edge_count), y_(target) {
  if (static_cast<std::uint64_t>(k_) * m_ > 40) throw BudgetExceeded("h-table history space too large");
  histories_ = std::uint64_t{1} << (k_ * m_);
  values_.assign(histories_ * n_, 0.0);
}

std::string HTable::to_csv() const {
  std::ostringstream out;
  out << "vertex,history-bits,h\n";
  char buf[64];
  for (std::uint64_t hist = 0; hist < histories_; ++hist) {
    const std::string bits = ModelState::from_index(k_, m_, hist).to_string();
    for (VertexId a = 0; a < n_; ++a) {
      const double v = values_[hist * n_ + a];
      if (std::isinf(v)) {
        std::snprintf(buf, sizeof buf, "inf");
      } else {
        std::snprintf(buf, sizeof buf, "%.17g", v);
      }
      out << a << ',' << bits << ',' << buf << '\n';
    }
  }
  return out.str();
}

template <class Scalar>
HTable to_htable(const HValuesMemoryless<Scalar>& h, std::size_t edge_count) {
  HTable table(h.h.size(), 0, edge_count, h.target);
  for (VertexId a = 0; a < h.h.size(); ++a) {
    table.at(a, std::uint64_t{0}) = h.h[a] ? to_double(*h.h[a]) : std::numeric_limits<double>::infinity();
  }
  return table;
}

template HTable to_htable<double>(const HValuesMemoryless<double>&, std::size_t);
template HTable to_htable<mpq_class>(const HValuesMemoryless<mpq_class>&, std::size_t);

VertexId policy_next_move(const StaticGraph& graph, std::span<const double> h, VertexId current,
                          const EdgeSet& snapshot) {
  VertexId best = current;
  double best_h = h[current];
  for (const Incidence& inc : graph.incident(current)) {
    if (!snapshot.contains(inc.edge)) continue;
    const double v = h[inc.other];
    if (v < best_h || (v == best_h && best != current && inc.other < best)) {
      best = inc.other;
      best_h = v;
    }
  }
  return best;
}

}  // namespace stg
