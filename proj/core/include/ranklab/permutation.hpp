#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string_view>
#include <vector>

#include "ranklab/graph.hpp"

namespace ranklab {

// Duplicate-free ordering of vertices. Positions are 0-based indices;
// the human-facing rank is index + 1.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput on duplicates.
  explicit Permutation(std::vector<VertexId> order);
  Permutation(std::initializer_list<std::string_view> names);

  const std::vector<VertexId>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }
  bool contains(const VertexId& v) const { return index_.count(v) != 0; }
  const VertexId& at(std::size_t i) const { return order_.at(i); }
  VertexSet members() const;

  // Throws NotAMember when v is absent.
  std::size_t index(const VertexId& v) const;
  std::size_t rank(const VertexId& v) const { return index(v) + 1; }

  // v lands at index i; everything else keeps its relative order.
  Permutation move_to(const VertexId& v, std::size_t i) const;

  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.order_ == b.order_; }

 private:
  std::vector<VertexId> order_;
  std::map<VertexId, std::size_t> index_;
};

inline std::size_t index(const Permutation& p, const VertexId& v) { return p.index(v); }
inline Permutation move_to(const Permutation& p, const VertexId& v, std::size_t i) { return p.move_to(v, i); }

}  // namespace ranklab
