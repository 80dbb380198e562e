#include "stg/journey.hpp"

#include <algorithm>

#include "stg/errors.hpp"

namespace stg {

ForemostSweep::ForemostSweep(const StaticGraph& graph, VertexId source, Time start)
    : graph_(&graph),
      source_(source),
      now_(start),
      arrival_(graph.vertex_count(), kUnreached),
      via_(graph.vertex_count(), 0) {
  if (source >= graph.vertex_count()) throw PreconditionError("source outside the vertex range");
  arrival_[source] = start;
  informed_.push_back(source);
}

void ForemostSweep::step(const EdgeSet& snapshot) {
  const Time t = ++now_;
  // Only vertices informed strictly before t may forward; newly informed
  // vertices are appended past `frontier` and skipped this round.
  const std::size_t frontier = informed_.size();
  for (std::size_t i = 0; i < frontier; ++i) {
    const VertexId u = informed_[i];
    for (const Incidence& inc : graph_->incident(u)) {
      if (arrival_[inc.other] != kUnreached || !snapshot.contains(inc.edge)) continue;
      arrival_[inc.other] = t;
      via_[inc.other] = inc.edge;
      informed_.push_back(inc.other);
    }
  }
}

std::optional<Time> ForemostSweep::arrival(VertexId v) const {
  if (arrival_.at(v) == kUnreached) return std::nullopt;
  return arrival_[v];
}

std::optional<Journey> ForemostSweep::witness(VertexId target) const {
  if (!reached(target)) return std::nullopt;
  Journey j;
  for (VertexId v = target; v != source_;) {
    const EdgeId e = via_[v];
    j.steps.push_back({e, arrival_[v]});
    const Edge& ed = graph_->edge(e);
    v = ed.u == v ? ed.v : ed.u;
  }
  std::reverse(j.steps.begin(), j.steps.end());
  return j;
}

ForemostResult foremost_arrival(const TemporalTrace& trace, const StaticGraph& graph, VertexId s,
                                VertexId y, Time start) {
  if (s == y) throw PreconditionError("foremost journey needs distinct terminals");
  if (y >= graph.vertex_count()) throw PreconditionError("target outside the vertex range");
  if (trace.edge_count() != graph.edge_count()) {
    throw PreconditionError("trace and graph disagree on the edge count");
  }
  ForemostSweep sweep(graph, s, start);
  for (Time t = start + 1; t <= trace.horizon() && !sweep.reached(y); ++t) sweep.step(trace.at(t));
  ForemostResult result;
  result.arrival = sweep.arrival(y);
  result.witness = sweep.witness(y);
  return result;
}

}  // namespace stg
