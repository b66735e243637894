#pragma once

#include <optional>

#include "ranklab/graph.hpp"
#include "ranklab/permutation.hpp"
#include "ranklab/ranking.hpp"

namespace ranklab {

// Arguments shared by shifts-to, zig and zag. The builders do not care
// which party is online: `pi` is the order of the party whose vertices
// "shift", `sigma` the order they shift along. Pass the orders exchanged
// (see swapped()) to walk the path from the other side.
struct ZigZagContext {
  Graph graph;
  Matching matching;
  Permutation pi;
  Permutation sigma;

  ZigZagContext swapped() const { return {graph, matching, sigma, pi}; }
};

// Context over online_match(inst) with the instance's own orders.
ZigZagContext ranking_context(const BipartiteInstance& inst);

// If u (a pi-vertex) lost v, would it move on to v2?
bool shifts_to(const ZigZagContext& ctx, const VertexId& u, const VertexId& v, const VertexId& v2);

// The unique v2 with shifts_to(ctx, u, v, v2), if any. It is the first
// candidate after v in sigma, since every later one fails the "between" clause.
std::optional<VertexId> shift_target(const ZigZagContext& ctx, const VertexId& u, const VertexId& v);

VertexPath zig(const ZigZagContext& ctx, const VertexId& v);
VertexPath zag(const ZigZagContext& ctx, const VertexId& u);

}  // namespace ranklab
