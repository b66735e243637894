#include "ranklab/ranking.hpp"

#include "ranklab/error.hpp"

namespace ranklab {

BipartiteInstance::BipartiteInstance(Graph graph, Permutation sigma, Permutation pi)
    : graph_(std::move(graph)), sigma_(std::move(sigma)), pi_(std::move(pi)) {
  for (const auto& v : sigma_) {
    if (pi_.contains(v)) throw InvalidInput(v.name() + " is listed as both offline and online");
  }
  if (!is_bipartite(graph_, sigma_.members(), pi_.members())) {
    throw InvalidInput("graph is not bipartite w.r.t. the offline and online orders");
  }
}

Matching step(const Graph& g, const VertexId& u, std::span<const VertexId> ranked, const Matching& m) {
  for (const auto& v : ranked) {
    if (!m.covers(v) && !m.covers(u) && g.has_edge(u, v)) {
      EdgeSet grown = m.edges();
      grown.emplace(u, v);
      return Matching(std::move(grown));
    }
  }
  return m;
}

Matching online_match(const Graph& g, const Permutation& arrival, const Permutation& ranked) {
  Matching m;
  for (const auto& u : arrival) m = step(g, u, ranked.order(), m);
  return m;
}

Matching online_match(const BipartiteInstance& inst) { return online_match(inst.graph(), inst.pi(), inst.sigma()); }

bool is_ranking_matching(const Graph& g, const Matching& m, const Permutation& pi, const Permutation& sigma) {
  // (1) graph_matching
  if (!is_subset(m.edges(), g.edges())) return false;
  // (2) bipartite w.r.t. the two orders
  if (!is_bipartite(g, pi.members(), sigma.members())) return false;
  // (3) maximal
  if (!is_maximal_matching(g, m)) return false;

  // Orient every edge as (pi-side, sigma-side); (2) makes this well defined.
  auto pi_side = [&](const Edge& e) -> const VertexId& { return pi.contains(e.first()) ? e.first() : e.second(); };

  // (4) u never skipped a lower-ranked neighbour that was still free.
  for (const auto& me : m) {
    const VertexId& u = pi_side(me);
    const VertexId& v = me.other(u);
    for (const auto& ge : g) {
      if (!ge.contains(u)) continue;
      const VertexId& v2 = ge.other(u);
      if (!(sigma.index(v2) < sigma.index(v))) continue;
      bool taken_earlier = false;
      for (const auto& me2 : m) {
        if (!me2.contains(v2)) continue;
        const VertexId& u2 = me2.other(v2);
        if (pi.index(u2) < pi.index(u)) taken_earlier = true;
      }
      if (!taken_earlier) return false;
    }
  }

  // (5) v never refused an earlier arrival that ended up with a worse partner.
  for (const auto& me : m) {
    const VertexId& u = pi_side(me);
    const VertexId& v = me.other(u);
    for (const auto& ge : g) {
      if (!ge.contains(v)) continue;
      const VertexId& u2 = ge.other(v);
      if (!(pi.index(u2) < pi.index(u))) continue;
      bool better_partner = false;
      for (const auto& me2 : m) {
        if (!me2.contains(u2)) continue;
        const VertexId& v2 = me2.other(u2);
        if (sigma.index(v2) < sigma.index(v)) better_partner = true;
      }
      if (!better_partner) return false;
    }
  }
  return true;
}

}  // namespace ranklab
