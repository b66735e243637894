#pragma once

// Brute-force references the library is checked against. They share no
// code with the implementation beyond the value types.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "ranklab/graph.hpp"
#include "ranklab/ranking.hpp"

namespace oracles {

using namespace ranklab;

// Every matching of g, once each. Vertices are visited in sorted order; each
// is left alone or paired with a free, larger neighbour.
inline void for_each_matching(const Graph& g, const std::function<void(const EdgeSet&)>& emit) {
  const std::vector<Edge> edges(g.begin(), g.end());
  const VertexSet vs = g.vertices();
  const std::vector<VertexId> all(vs.begin(), vs.end());
  EdgeSet chosen;
  VertexSet used;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == all.size()) {
      emit(chosen);
      return;
    }
    const VertexId& a = all[k];
    rec(k + 1);
    if (used.count(a)) return;
    for (const auto& e : edges) {
      if (!e.contains(a)) continue;
      const VertexId& b = e.other(a);
      if (used.count(b) || b < a) continue;
      chosen.insert(e);
      used.insert(a);
      used.insert(b);
      rec(k + 1);
      used.erase(b);
      used.erase(a);
      chosen.erase(e);
    }
  };
  rec(0);
}

inline std::size_t max_matching_size(const Graph& g) {
  std::size_t best = 0;
  for_each_matching(g, [&](const EdgeSet& s) { best = std::max(best, s.size()); });
  return best;
}

// Ranking by hand: each arrival scans the list for a free neighbour.
inline EdgeSet greedy(const Graph& g, const std::vector<VertexId>& arrival, const std::vector<VertexId>& ranked) {
  EdgeSet m;
  VertexSet used;
  for (const auto& u : arrival) {
    for (const auto& v : ranked) {
      if (!used.count(v) && g.contains(Edge(u, v))) {
        m.emplace(u, v);
        used.insert(v);
        break;
      }
    }
  }
  return m;
}

// Every simple path of g, as vertex sequences of length >= 2.
inline void for_each_path(const Graph& g, const std::function<void(const std::vector<VertexId>&)>& emit) {
  const VertexSet vs = g.vertices();
  std::vector<VertexId> path;
  std::function<void()> extend = [&] {
    if (path.size() >= 2) emit(path);
    for (const auto& w : vs) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      if (!g.contains(Edge(path.back(), w))) continue;
      path.push_back(w);
      extend();
      path.pop_back();
    }
  };
  for (const auto& v : vs) {
    path = {v};
    extend();
  }
}

}  // namespace oracles
