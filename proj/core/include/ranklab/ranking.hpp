#pragma once

#include <span>

#include "ranklab/graph.hpp"
#include "ranklab/permutation.hpp"

namespace ranklab {

// A bipartite graph together with the ranking order `sigma` over the
// offline party and the arrival order `pi` over the online party.
class BipartiteInstance {
 public:
  BipartiteInstance() = default;
  // Throws InvalidInput unless the parties are disjoint and every edge
  // joins one offline and one online vertex.
  BipartiteInstance(Graph graph, Permutation sigma, Permutation pi);

  const Graph& graph() const noexcept { return graph_; }
  const Permutation& sigma() const noexcept { return sigma_; }
  const Permutation& pi() const noexcept { return pi_; }

  bool is_offline(const VertexId& v) const { return sigma_.contains(v); }
  bool is_online(const VertexId& v) const { return pi_.contains(v); }

  BipartiteInstance with_graph(Graph g) const { return {std::move(g), sigma_, pi_}; }
  BipartiteInstance with_sigma(Permutation s) const { return {graph_, std::move(s), pi_}; }

  friend bool operator==(const BipartiteInstance&, const BipartiteInstance&) = default;

 private:
  Graph graph_;
  Permutation sigma_;
  Permutation pi_;
};

// One arrival: u takes the first vertex of `ranked` that is free, adjacent
// and while u itself is still free; otherwise m comes back unchanged.
Matching step(const Graph& g, const VertexId& u, std::span<const VertexId> ranked, const Matching& m);

// Folds `step` over `arrival`, scanning the whole `ranked` order each time.
Matching online_match(const Graph& g, const Permutation& arrival, const Permutation& ranked);
Matching online_match(const BipartiteInstance& inst);

// The declarative five-clause characterisation of online_match's output.
// Evaluated by plain nested loops: this is the oracle other code is checked
// against.
bool is_ranking_matching(const Graph& g, const Matching& m, const Permutation& pi, const Permutation& sigma);

}  // namespace ranklab
