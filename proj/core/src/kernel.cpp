#include "ranklab/kernel.hpp"

#include "ranklab/error.hpp"

namespace ranklab {

IndexedInstance::IndexedInstance(const BipartiteInstance& inst) : offline_count_(inst.sigma().size()) {
  if (inst.sigma().size() > kMaxSide || inst.pi().size() > kMaxSide) {
    throw InvalidInput("indexed matching supports at most 64 vertices per party");
  }
  adjacency_.assign(inst.pi().size(), 0);
  for (const auto& e : inst.graph()) {
    const bool first_online = inst.pi().contains(e.first());
    const VertexId& u = first_online ? e.first() : e.second();
    const VertexId& v = first_online ? e.second() : e.first();
    adjacency_[inst.pi().index(u)] |= std::uint64_t{1} << inst.sigma().index(v);
  }
}

std::size_t IndexedInstance::match(std::span<const std::uint8_t> ranking,
                                   std::span<std::int8_t> partner_of_arrival) const {
  std::uint64_t taken = 0;
  std::size_t size = 0;
  for (std::size_t k = 0; k < adjacency_.size(); ++k) {
    partner_of_arrival[k] = kUnmatched;
    const std::uint64_t free_neighbours = adjacency_[k] & ~taken;
    if (!free_neighbours) continue;
    for (const std::uint8_t v : ranking) {
      if (free_neighbours >> v & 1U) {
        taken |= std::uint64_t{1} << v;
        partner_of_arrival[k] = static_cast<std::int8_t>(v);
        ++size;
        break;
      }
    }
  }
  return size;
}

Matching IndexedInstance::to_matching(std::span<const std::int8_t> partner_of_arrival,
                                      const BipartiteInstance& inst) const {
  EdgeSet edges;
  for (std::size_t k = 0; k < partner_of_arrival.size(); ++k) {
    if (partner_of_arrival[k] != kUnmatched) {
      edges.emplace(inst.pi().at(k), inst.sigma().at(static_cast<std::size_t>(partner_of_arrival[k])));
    }
  }
  return Matching(std::move(edges));
}

}  // namespace ranklab
