#include "stg/edge_law.hpp"

#include <algorithm>

#include "stg/errors.hpp"

namespace stg {

EdgeLaw EdgeLaw::memoryless(Probability p) { return EdgeLaw(Declared::Memoryless, 0, {p}); }

EdgeLaw EdgeLaw::memory1(Probability birth, Probability death) {
  return EdgeLaw(Declared::Memory1, 1, {birth, death.complement()});
}

EdgeLaw EdgeLaw::memory_k(unsigned k, std::vector<Probability> table) {
  if (k > kMaxMemory) {
    throw PreconditionError("memory " + std::to_string(k) + " exceeds the supported maximum " +
                            std::to_string(kMaxMemory));
  }
  if (table.size() != (std::size_t{1} << k)) {
    throw PreconditionError("memory-" + std::to_string(k) + " table needs " +
                            std::to_string(std::size_t{1} << k) + " entries, got " +
                            std::to_string(table.size()));
  }
  return EdgeLaw(k == 0 ? Declared::Memoryless : Declared::MemoryK, k, std::move(table));
}

Probability EdgeLaw::min_probability() const {
  return *std::min_element(table_.begin(), table_.end());
}

Probability EdgeLaw::max_probability() const {
  return *std::max_element(table_.begin(), table_.end());
}

EdgeLaw EdgeLaw::lifted(unsigned k) const {
  if (k < k_) throw PreconditionError("cannot lower the memory of an edge law");
  if (k == k_) return *this;
  if (k > kMaxMemory) throw PreconditionError("memory exceeds the supported maximum");
  std::vector<Probability> table(std::size_t{1} << k);
  const unsigned drop = k - k_;
  for (std::uint32_t h = 0; h < table.size(); ++h) table[h] = table_[h >> drop];
  return EdgeLaw(Declared::MemoryK, k, std::move(table));
}

std::string EdgeLaw::to_string() const {
  switch (declared_) {
    case Declared::Memoryless:
      return "memoryless:" + table_[0].to_string();
    case Declared::Memory1:
      return "memory1:" + table_[0].to_string() + "," + table_[1].complement().to_string();
    case Declared::MemoryK: {
      std::string out = "memoryk:" + std::to_string(k_) + ":";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) out += ',';
        out += table_[i].to_string();
      }
      return out;
    }
  }
  return {};
}

Probability appearance_prob(const EdgeLaw& law, const EdgeHistory& history) {
  if (history.k != law.memory()) {
    throw PreconditionError("history of length " + std::to_string(history.k) +
                            " given to a memory-" + std::to_string(law.memory()) + " law");
  }
  return law.at(history.bits);
}

}  // namespace stg
