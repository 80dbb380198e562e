#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "stg/graph.hpp"
#include "stg/probability.hpp"

namespace stg {

/// Positive partitioned 2-DNF: OR over clauses (i, j) of x_i AND y_j.
/// Indices are 0-based in memory and 1-based in the text format:
///
///     pp2dnf <n_x> <n_y>
///     clause <i> <j>
struct Pp2dnfFormula {
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  std::vector<std::pair<std::size_t, std::size_t>> clauses;

  /// Throws PreconditionError on out-of-range indices or duplicate clauses.
  void validate() const;
};

Pp2dnfFormula parse_pp2dnf(std::string_view text);
std::string to_string(const Pp2dnfFormula& f);

/// Number of satisfying assignments, by enumerating all 2^{n_x + n_y}
/// assignments. Throws BudgetExceeded when n_x + n_y > 24.
std::uint64_t pp2dnf_count(const Pp2dnfFormula& f);

/// Memoryless instance whose expected arrival encodes the formula's count.
///
/// Vertices: s = 0, y = 1, x_1..x_{n_x}, y_1..y_{n_y}, then v1, v2, v3.
/// Edges (s, x_i) and (y_j, y) have p = 1/2; clause edges (x_i, y_j) and
/// the path s - v1 - v2 - v3 - y have p = 1. The path caps the arrival at
/// 4, and arrival 3 happens exactly when a satisfied clause is realized,
/// so psi = 2^{n_x + n_y} (4 - E[X(s, y)]).
struct MinArrivalGadget {
  StaticGraph graph;
  std::vector<Probability> probs;
  VertexId s = 0;
  VertexId y = 1;
};

MinArrivalGadget build_min_arrival_gadget(const Pp2dnfFormula& f, bool directed = false);

struct GadgetVerification {
  mpq_class expectation;          // E[X(s, y)] from the informed-set oracle
  mpq_class psi_from_expectation;  // 2^{n_x + n_y} (4 - E[X])
  std::uint64_t psi_direct = 0;    // pp2dnf_count
  bool integral = false;           // psi_from_expectation is an integer
  bool match = false;              // integral and equal to psi_direct
};

GadgetVerification verify_gadget_identity(const Pp2dnfFormula& f, bool directed = false,
                                          std::size_t max_vertices = 14);

}  // namespace stg
