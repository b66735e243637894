#include "ranklab/generators.hpp"

#include <algorithm>
#include <string>

#include "enumerate.hpp"
#include "ranklab/error.hpp"
#include "ranklab/probability.hpp"
#include "ranklab/rng.hpp"

namespace ranklab {

namespace {

std::vector<VertexId> named(char prefix, std::size_t count) {
  std::vector<VertexId> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) out.emplace_back(prefix + std::to_string(k));
  return out;
}

void check_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0,1]");
}

BipartiteInstance shuffled(EdgeSet edges, std::vector<VertexId> offline, std::vector<VertexId> online,
                           SplitMix64& rng) {
  shuffle(std::span<VertexId>(offline), rng);
  shuffle(std::span<VertexId>(online), rng);
  return BipartiteInstance(Graph(std::move(edges)), Permutation(std::move(offline)), Permutation(std::move(online)));
}

VertexId offline_gamma(std::size_t k) { return VertexId("o" + std::to_string(k)); }
VertexId online_gamma(std::size_t l) { return VertexId("i" + std::to_string(l)); }

void check_gamma(std::size_t n) {
  if (n < 1 || n > kMaxGamma) {
    throw InvalidInput("Gamma_n is enumerated only for 1 <= n <= " + std::to_string(kMaxGamma));
  }
}

}  // namespace

BipartiteInstance gen_random(std::size_t n_offline, std::size_t n_online, double edge_prob, std::uint64_t seed) {
  check_prob(edge_prob);
  SplitMix64 rng = stream(seed, 0);
  auto offline = named('v', n_offline);
  auto online = named('u', n_online);
  EdgeSet edges;
  for (const auto& u : online) {
    for (const auto& v : offline) {
      if (uniform01(rng) < edge_prob) edges.emplace(u, v);
    }
  }
  return shuffled(std::move(edges), std::move(offline), std::move(online), rng);
}

PlantedInstance gen_perfect(std::size_t n, double extra_edge_prob, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("gen_perfect needs n >= 1");
  check_prob(extra_edge_prob);
  SplitMix64 rng = stream(seed, 0);
  auto offline = named('v', n);
  auto online = named('u', n);
  EdgeSet planted, edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) {
        planted.emplace(online[a], offline[b]);
        edges.emplace(online[a], offline[b]);
      } else if (uniform01(rng) < extra_edge_prob) {
        edges.emplace(online[a], offline[b]);
      }
    }
  }
  return {shuffled(std::move(edges), std::move(offline), std::move(online), rng), Matching(std::move(planted))};
}

Matching gamma_planted_matching(std::size_t n) {
  EdgeSet m;
  for (std::size_t k = 0; k < n; ++k) m.emplace(offline_gamma(k), online_gamma(k));
  return Matching(std::move(m));
}

std::vector<Graph> gamma_graphs(std::size_t n) {
  check_gamma(n);
  const Matching planted = gamma_planted_matching(n);
  std::vector<Edge> optional_edges;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    for (std::size_t l = 0; l < 2 * n; ++l) {
      if (!(k == l && k < n)) optional_edges.emplace_back(offline_gamma(k), online_gamma(l));
    }
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional_edges.size()); ++mask) {
    EdgeSet edges = planted.edges();
    for (std::size_t b = 0; b < optional_edges.size(); ++b) {
      if (mask >> b & 1U) edges.insert(optional_edges[b]);
    }
    Graph g(std::move(edges));
    // M_n is maximum exactly when no augmenting path exists.
    if (!find_augmenting_path(g, planted)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Vertices of g whose token starts with `prefix`, by numeric index.
std::vector<VertexId> gamma_party(const Graph& g, char prefix) {
  std::vector<VertexId> out;
  for (const auto& v : g.vertices()) {
    if (v.name()[0] == prefix) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const VertexId& a, const VertexId& b) {
    return std::stoul(a.name().substr(1)) < std::stoul(b.name().substr(1));
  });
  return out;
}

}  // namespace

Permutation gamma_offline(const Graph& g) { return Permutation(gamma_party(g, 'o')); }

std::vector<Permutation> gamma_arrival_orders(const Graph& g) {
  const std::vector<VertexId> online = gamma_party(g, 'i');
  std::vector<std::size_t> idx(online.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::vector<Permutation> out;
  do {
    std::vector<VertexId> order;
    for (const std::size_t k : idx) order.push_back(online[k]);
    out.emplace_back(std::move(order));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

GammaReport gamma_min_ratio(std::size_t n, unsigned workers) {
  const std::vector<Graph> graphs = gamma_graphs(n);
  struct Best {
    std::size_t instances = 0;
    std::optional<Rational> ratio;
    std::optional<BipartiteInstance> argmin;
  };
  const auto per_graph = detail::run_tasks<Best>(graphs.size(), workers, [&](std::size_t k) {
    Best best;
    const Permutation offline = gamma_offline(graphs[k]);
    for (const auto& arrival : gamma_arrival_orders(graphs[k])) {
      BipartiteInstance inst(graphs[k], offline, arrival);
      const Rational ratio = exact_expected_size(inst).value / n;
      ++best.instances;
      if (!best.ratio || ratio < *best.ratio) {
        best.ratio = ratio;
        best.argmin = std::move(inst);
      }
    }
    return best;
  });

  GammaReport out;
  out.n = n;
  out.graphs = graphs.size();
  bool first = true;
  for (const auto& b : per_graph) {
    out.instances += b.instances;
    if (first || *b.ratio < out.min_ratio) {
      out.min_ratio = *b.ratio;
      out.argmin = *b.argmin;
      first = false;
    }
  }
  return out;
}

}  // namespace ranklab
