#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ranklab/graph.hpp"
#include "ranklab/rational.hpp"
#include "ranklab/ranking.hpp"

namespace ranklab {

// Offline v1..vN, online u1..uM; every cross pair kept with probability
// `edge_prob`; both orders shuffled. Throws InvalidInput unless
// 0 <= edge_prob <= 1.
BipartiteInstance gen_random(std::size_t n_offline, std::size_t n_online, double edge_prob, std::uint64_t seed);

struct PlantedInstance {
  BipartiteInstance instance;
  Matching planted;  // {v_k, u_k}
};

// n >= 1. The planted matching is perfect; other pairs appear with
// probability `extra_edge_prob`.
PlantedInstance gen_perfect(std::size_t n, double extra_edge_prob, std::uint64_t seed);

// Gamma_n: subgraphs of the 2n x 2n grid o<k> - i<l> that contain
// {o_k, i_k | k < n} as a maximum matching. n <= 2.
inline constexpr std::size_t kMaxGamma = 2;

Matching gamma_planted_matching(std::size_t n);
std::vector<Graph> gamma_graphs(std::size_t n);

// Offline vertices with an edge, in index order.
Permutation gamma_offline(const Graph& g);
// Every arrival order of the online vertices that have an edge.
std::vector<Permutation> gamma_arrival_orders(const Graph& g);

struct GammaReport {
  std::size_t n = 0;
  std::size_t graphs = 0;
  std::size_t instances = 0;  // (graph, arrival order) pairs
  Rational min_ratio;
  BipartiteInstance argmin;
};

// Exact minimum of E|R| / n over all of Gamma_n and its arrival orders.
GammaReport gamma_min_ratio(std::size_t n, unsigned workers = 1);

}  // namespace ranklab
