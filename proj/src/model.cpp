#include "stg/model.hpp"

#include <algorithm>

#include "stg/errors.hpp"

namespace stg {

void ModelState::advance(const EdgeSet& snapshot) {
  if (k_ == 0) return;
  for (EdgeId e = 0; e < bits_.size(); ++e) {
    bits_[e] = (bits_[e] >> 1) | (static_cast<std::uint32_t>(snapshot.contains(e)) << (k_ - 1));
  }
}

std::uint64_t ModelState::index() const {
  if (static_cast<std::uint64_t>(k_) * bits_.size() > 62) {
    throw BudgetExceeded("global history of " + std::to_string(k_ * bits_.size()) +
                         " bits cannot be indexed densely");
  }
  std::uint64_t idx = 0;
  for (EdgeId e = 0; e < bits_.size(); ++e) idx |= static_cast<std::uint64_t>(bits_[e]) << (k_ * e);
  return idx;
}

ModelState ModelState::from_index(unsigned k, std::size_t edge_count, std::uint64_t index) {
  std::vector<std::uint32_t> bits(edge_count, 0);
  if (k > 0) {
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    for (EdgeId e = 0; e < edge_count; ++e) bits[e] = static_cast<std::uint32_t>((index >> (k * e)) & mask);
  }
  return {k, std::move(bits)};
}

std::string ModelState::to_string() const {
  if (k_ == 0 || bits_.empty()) return "-";
  std::string out;
  for (std::size_t e = 0; e < bits_.size(); ++e) {
    if (e) out += '.';
    for (unsigned i = 0; i < k_; ++i) out += ((bits_[e] >> i) & 1U) ? '1' : '0';
  }
  return out;
}

StochasticModel::StochasticModel(StaticGraph graph, std::vector<EdgeLaw> laws,
                                 std::optional<ModelState> initial)
    : graph_(std::move(graph)), laws_(std::move(laws)) {
  if (laws_.size() != graph_.edge_count()) {
    throw PreconditionError("model needs one law per edge");
  }
  for (const EdgeLaw& law : laws_) k_ = std::max(k_, law.memory());
  law_probs_.reserve(laws_.size());
  for (EdgeLaw& law : laws_) {
    law = law.lifted(k_);
    std::vector<double> probs;
    probs.reserve(law.table().size());
    for (const Probability& p : law.table()) probs.push_back(p.to_double());
    law_probs_.push_back(std::move(probs));
  }
  if (initial) {
    if (initial->memory() != k_ || initial->edge_count() != graph_.edge_count()) {
      throw PreconditionError("initial history does not match the model's memory or edge count");
    }
    initial_ = std::move(*initial);
  } else {
    initial_ = blank_state();
  }
}

StochasticModel StochasticModel::from_spec(const GraphSpec& spec) {
  unsigned k = 0;
  for (const EdgeLaw& law : spec.laws) k = std::max(k, law.memory());
  std::vector<std::uint32_t> bits(spec.graph.edge_count(), 0);
  for (EdgeId e = 0; e < spec.graph.edge_count(); ++e) {
    if (e >= spec.init.size() || !spec.init[e]) continue;
    // init is oldest-first over the edge's own memory; older lifted bits stay absent.
    const std::string& s = *spec.init[e];
    const unsigned offset = k - static_cast<unsigned>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') bits[e] |= std::uint32_t{1} << (offset + i);
    }
  }
  return StochasticModel(spec.graph, spec.laws, ModelState(k, std::move(bits)));
}

StochasticModel StochasticModel::memoryless(StaticGraph graph, const std::vector<Probability>& probs) {
  std::vector<EdgeLaw> laws;
  laws.reserve(probs.size());
  for (const Probability& p : probs) laws.push_back(EdgeLaw::memoryless(p));
  return StochasticModel(std::move(graph), std::move(laws));
}

double StochasticModel::snapshot_transition_prob(const ModelState& state, const EdgeSet& next) const {
  double prob = 1.0;
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    const double p = appearance_prob(e, state);
    prob *= next.contains(e) ? p : 1.0 - p;
  }
  return prob;
}

double StochasticModel::min_appearance_prob() const {
  double lo = 1.0;
  for (const auto& probs : law_probs_) {
    for (double p : probs) lo = std::min(lo, p);
  }
  return lo;
}

std::vector<Probability> StochasticModel::memoryless_probabilities() const {
  if (k_ != 0) throw PreconditionError("model has memory " + std::to_string(k_) + ", expected memoryless");
  std::vector<Probability> out;
  out.reserve(laws_.size());
  for (const EdgeLaw& law : laws_) out.push_back(law.at(0));
  return out;
}

EdgeSet StochasticModel::draw_snapshot(const ModelState& state, CounterRng& rng) const {
  EdgeSet snapshot(graph_.edge_count());
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    if (rng.bernoulli(appearance_prob(e, state))) snapshot.insert(e);
  }
  return snapshot;
}

}  // namespace stg
