#pragma once

#include <string>

#include "ranklab/graph.hpp"
#include "ranklab/instance_io.hpp"
#include "ranklab/ranking.hpp"

#ifndef RANKLAB_TEST_DATA_DIR
#error "RANKLAB_TEST_DATA_DIR must be defined"
#endif

namespace fixtures {

using namespace ranklab;

inline std::string data_path(const std::string& name) { return std::string(RANKLAB_TEST_DATA_DIR) + "/" + name; }

inline BipartiteInstance fig1() { return read_instance_file(data_path("fig1.obm")); }
inline BipartiteInstance fig5() { return read_instance_file(data_path("fig5.obm")); }

inline Matching fig5_perfect() { return Matching{{"u1", "v3"}, {"u2", "v2"}, {"u3", "v4"}, {"u4", "v1"}}; }

// g = {u1v1, u1v2, u2v1}, sigma = [v1,v2], pi = [u1,u2]
inline BipartiteInstance two_by_two() {
  return {Graph{{"u1", "v1"}, {"u1", "v2"}, {"u2", "v1"}}, Permutation{"v1", "v2"}, Permutation{"u1", "u2"}};
}

// g' = {u1v1, u1v2, u2v2}: has the perfect matching {u1v1, u2v2}
inline BipartiteInstance g_prime() {
  return {Graph{{"u1", "v1"}, {"u1", "v2"}, {"u2", "v2"}}, Permutation{"v1", "v2"}, Permutation{"u1", "u2"}};
}

inline BipartiteInstance single_edge() { return {Graph{{"u", "v"}}, Permutation{"v"}, Permutation{"u"}}; }

// u_k - v_k for k = 1..n and nothing else.
inline BipartiteInstance one_regular(std::size_t n) {
  EdgeSet e;
  std::vector<VertexId> sigma, pi;
  for (std::size_t k = 1; k <= n; ++k) {
    sigma.emplace_back("v" + std::to_string(k));
    pi.emplace_back("u" + std::to_string(k));
    e.emplace(pi.back(), sigma.back());
  }
  return {Graph(std::move(e)), Permutation(std::move(sigma)), Permutation(std::move(pi))};
}

}  // namespace fixtures
