#include "ranklab/lemmas.hpp"

#include <sstream>

#include "ranklab/error.hpp"

namespace ranklab {

namespace {

RemovalDiff removal_diff(const BipartiteInstance& inst, const VertexId& x, const ZigZagContext& ctx) {
  RemovalDiff out;
  out.before = ctx.matching;
  out.after = online_match(remove_vertices(inst.graph(), VertexSet{x}), inst.pi(), inst.sigma());
  if (out.before == out.after) return out;

  out.kind = RemovalDiff::Kind::path;
  out.path = zig(ctx, x);
  const EdgeSet diff = symmetric_difference(out.before.edges(), out.after.edges());
  if (out.path.edge_set() != diff) {
    std::ostringstream msg;
    msg << "removing " << x << ": zig path " << out.path << " does not cover the " << diff.size()
        << "-edge symmetric difference";
    throw LemmaViolation(msg.str());
  }
  return out;
}

}  // namespace

RemovalDiff removal_diff_online(const BipartiteInstance& inst, const VertexId& u) {
  if (!inst.is_online(u)) throw NotAMember(u.name() + " is not an online vertex");
  return removal_diff(inst, u, ranking_context(inst).swapped());
}

RemovalDiff removal_diff_offline(const BipartiteInstance& inst, const VertexId& v) {
  if (!inst.is_offline(v)) throw NotAMember(v.name() + " is not an offline vertex");
  return removal_diff(inst, v, ranking_context(inst));
}

SymmetrySides zig_zag_symmetry_sides(const Graph& g, const Permutation& removed_order, const Permutation& other_order,
                                     const VertexId& removed) {
  const Matching m = online_match(g, removed_order, other_order);
  auto x = m.partner(removed);
  if (!x) throw PreconditionError(removed.name() + " is unmatched, the symmetry statement needs a matched vertex");
  const Graph h = remove_vertices(g, VertexSet{removed});
  // M' is the ranking matching of H with the parties' roles exchanged.
  const Matching m_prime = online_match(h, other_order, removed_order);
  const ZigZagContext reduced{h, m_prime, removed_order, other_order};
  const ZigZagContext full{g, m, other_order, removed_order};
  return {zig(reduced, *x), zag(full, *x)};
}

bool check_zig_zag_symmetry(const BipartiteInstance& inst, const VertexId& u) {
  if (!inst.is_online(u)) throw NotAMember(u.name() + " is not an online vertex");
  return zig_zag_symmetry_sides(inst.graph(), inst.pi(), inst.sigma(), u).equal();
}

namespace {

bool guard_holds(const ZigZagContext& ctx, const VertexSet& removed, std::size_t reference_index) {
  for (const auto& x : removed) {
    if (!ctx.pi.contains(x)) return false;
    auto mate = ctx.matching.partner(x);
    if (mate && !(ctx.sigma.contains(*mate) && ctx.sigma.index(*mate) < reference_index)) return false;
  }
  return true;
}

}  // namespace

StabilityVerdict check_removal_stability(const ZigZagContext& ctx, const VertexSet& removed, const VertexId& probe) {
  for (const auto& x : removed) {
    if (!ctx.pi.contains(x)) return StabilityVerdict::guard_violated;
  }
  const ZigZagContext reduced{remove_vertices(ctx.graph, removed), remove_vertices(ctx.matching, removed), ctx.pi,
                              ctx.sigma};
  if (ctx.sigma.contains(probe)) {
    if (!guard_holds(ctx, removed, ctx.sigma.index(probe))) return StabilityVerdict::guard_violated;
    return zig(reduced, probe) == zig(ctx, probe) ? StabilityVerdict::equal : StabilityVerdict::differs;
  }
  if (ctx.pi.contains(probe)) {
    // The guard is vacuous for an unmatched probe.
    if (auto mate = ctx.matching.partner(probe)) {
      if (!ctx.sigma.contains(*mate) || !guard_holds(ctx, removed, ctx.sigma.index(*mate))) {
        return StabilityVerdict::guard_violated;
      }
    }
    return zag(reduced, probe) == zag(ctx, probe) ? StabilityVerdict::equal : StabilityVerdict::differs;
  }
  throw NotAMember(probe.name() + " is in neither order of the context");
}

StabilityVerdict check_removal_stability(const BipartiteInstance& inst, const VertexSet& removed,
                                         const VertexId& probe) {
  return check_removal_stability(ranking_context(inst), removed, probe);
}

RankMoveReport check_rank_move(const BipartiteInstance& inst, const Matching& perfect, const VertexId& v,
                               std::size_t i) {
  if (!inst.is_offline(v)) throw NotAMember(v.name() + " is not an offline vertex");
  if (!is_subset(perfect.edges(), inst.graph().edges()) || !perfect.covers(v)) {
    throw PreconditionError("check_rank_move: supplied matching must lie in the graph and cover " + v.name());
  }
  RankMoveReport out;
  if (online_match(inst).covers(v)) return out;

  out.status = RankMoveReport::Status::checked;
  out.u = perfect.partner(v);
  const Permutation moved = inst.sigma().move_to(v, i);
  const Matching after = online_match(inst.graph(), inst.pi(), moved);
  out.new_partner = after.partner(*out.u);
  out.u_matched = out.new_partner.has_value();
  if (out.u_matched) {
    const std::size_t bound = inst.sigma().index(v);
    out.holds_in_moved_order = moved.index(*out.new_partner) <= bound;
    out.holds_in_original_order = inst.sigma().index(*out.new_partner) <= bound;
  }
  return out;
}

}  // namespace ranklab
