#include "ranklab/zigzag.hpp"

#include <vector>

namespace ranklab {

ZigZagContext ranking_context(const BipartiteInstance& inst) {
  return {inst.graph(), online_match(inst), inst.pi(), inst.sigma()};
}

namespace {

bool matched_before(const ZigZagContext& ctx, const VertexId& target, std::size_t arrival_bound) {
  auto mate = ctx.matching.partner(target);
  return mate && ctx.pi.contains(*mate) && ctx.pi.index(*mate) < arrival_bound;
}

}  // namespace

bool shifts_to(const ZigZagContext& ctx, const VertexId& u, const VertexId& v, const VertexId& v2) {
  if (!ctx.pi.contains(u) || !ctx.sigma.contains(v2) || !ctx.sigma.contains(v)) return false;
  const std::size_t from = ctx.sigma.index(v);
  const std::size_t to = ctx.sigma.index(v2);
  if (!(from < to)) return false;
  if (!ctx.graph.has_edge(u, v2)) return false;
  const std::size_t arrival = ctx.pi.index(u);
  if (matched_before(ctx, v2, arrival)) return false;
  for (std::size_t k = from + 1; k < to; ++k) {
    const VertexId& between = ctx.sigma.at(k);
    if (ctx.graph.has_edge(u, between) && !matched_before(ctx, between, arrival)) return false;
  }
  return true;
}

std::optional<VertexId> shift_target(const ZigZagContext& ctx, const VertexId& u, const VertexId& v) {
  if (!ctx.sigma.contains(v)) return std::nullopt;
  for (std::size_t k = ctx.sigma.index(v) + 1; k < ctx.sigma.size(); ++k) {
    if (shifts_to(ctx, u, v, ctx.sigma.at(k))) return ctx.sigma.at(k);
  }
  return std::nullopt;
}

namespace {

void zag_into(const ZigZagContext& ctx, const VertexId& u, std::vector<VertexId>& out);

void zig_into(const ZigZagContext& ctx, const VertexId& v, std::vector<VertexId>& out) {
  out.push_back(v);
  if (auto u = ctx.matching.partner(v)) zag_into(ctx, *u, out);
}

void zag_into(const ZigZagContext& ctx, const VertexId& u, std::vector<VertexId>& out) {
  out.push_back(u);
  auto v = ctx.matching.partner(u);
  if (!v) return;
  // Targets sit strictly later in sigma, so the recursion descends.
  if (auto next = shift_target(ctx, u, *v)) zig_into(ctx, *next, out);
}

}  // namespace

VertexPath zig(const ZigZagContext& ctx, const VertexId& v) {
  std::vector<VertexId> out;
  zig_into(ctx, v, out);
  return VertexPath(std::move(out));
}

VertexPath zag(const ZigZagContext& ctx, const VertexId& u) {
  std::vector<VertexId> out;
  zag_into(ctx, u, out);
  return VertexPath(std::move(out));
}

}  // namespace ranklab
