#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ranklab/ranking.hpp"

namespace ranklab {

// online_match over small integer indices, for the enumeration and
// sampling loops. Offline vertex k is inst.sigma().at(k), arrival k is
// inst.pi().at(k). The scan is the same as `step`: every arrival walks the
// whole ranking and takes the first free neighbour.
class IndexedInstance {
 public:
  static constexpr std::size_t kMaxSide = 64;
  static constexpr std::int8_t kUnmatched = -1;

  // Throws InvalidInput when either party exceeds kMaxSide.
  explicit IndexedInstance(const BipartiteInstance& inst);

  std::size_t offline_count() const noexcept { return offline_count_; }
  std::size_t online_count() const noexcept { return adjacency_.size(); }
  std::uint64_t adjacency(std::size_t arrival) const noexcept { return adjacency_[arrival]; }

  // `ranking[r]` is the offline index holding rank r+1. Writes the offline
  // partner of every arrival (or kUnmatched) and returns the matching size.
  std::size_t match(std::span<const std::uint8_t> ranking, std::span<std::int8_t> partner_of_arrival) const;

  Matching to_matching(std::span<const std::int8_t> partner_of_arrival, const BipartiteInstance& inst) const;

 private:
  std::size_t offline_count_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

}  // namespace ranklab
