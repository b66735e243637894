#include "ranklab/permutation.hpp"

#include <algorithm>

#include "ranklab/error.hpp"

namespace ranklab {

Permutation::Permutation(std::vector<VertexId> order) : order_(std::move(order)) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (!index_.emplace(order_[i], i).second) throw InvalidInput("permutation lists " + order_[i].name() + " twice");
  }
}

Permutation::Permutation(std::initializer_list<std::string_view> names)
    : Permutation([&] {
        std::vector<VertexId> vs;
        for (auto n : names) vs.emplace_back(n);
        return vs;
      }()) {}

VertexSet Permutation::members() const { return VertexSet(order_.begin(), order_.end()); }

std::size_t Permutation::index(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw NotAMember(v.name() + " is not in the permutation");
  return it->second;
}

Permutation Permutation::move_to(const VertexId& v, std::size_t i) const {
  const std::size_t from = index(v);
  if (i >= order_.size()) {
    throw PreconditionError("move_to: index " + std::to_string(i) + " out of range for length " +
                            std::to_string(order_.size()));
  }
  std::vector<VertexId> out = order_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(from));
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), v);
  return Permutation(std::move(out));
}

}  // namespace ranklab
