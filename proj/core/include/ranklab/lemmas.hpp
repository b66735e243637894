#pragma once

#include <cstddef>
#include <optional>

#include "ranklab/graph.hpp"
#include "ranklab/ranking.hpp"
#include "ranklab/zigzag.hpp"

namespace ranklab {

// What happens to online_match when one vertex is deleted from the graph.
struct RemovalDiff {
  enum class Kind { equal, path };
  Kind kind = Kind::equal;
  VertexPath path;      // set when kind == path
  Matching before;      // online_match on the full graph
  Matching after;       // online_match with the vertex's edges removed

  bool is_equal() const noexcept { return kind == Kind::equal; }
};

// Online vertex u removed. The difference must be zig over the swapped
// orders starting at u; throws LemmaViolation otherwise and NotAMember
// when u is not online.
RemovalDiff removal_diff_online(const BipartiteInstance& inst, const VertexId& u);

// Offline vertex v removed; zig runs over the instance's own orders.
RemovalDiff removal_diff_offline(const BipartiteInstance& inst, const VertexId& v);

struct SymmetrySides {
  VertexPath zig_side;  // zig over G minus the removed vertex
  VertexPath zag_side;  // zag over G
  bool equal() const { return zig_side == zag_side; }
};

// Removes the matched vertex `removed` (a member of `removed_order`),
// takes its partner x, and compares
//   zig(G \ {removed}, M', x, removed_order, other_order)
//   zag(G, M, x, other_order, removed_order)
// (context argument order: pi, then sigma).
// Throws PreconditionError when `removed` is unmatched.
SymmetrySides zig_zag_symmetry_sides(const Graph& g, const Permutation& removed_order, const Permutation& other_order,
                                     const VertexId& removed);

// Online u removed (u must be matched by online_match(inst)).
bool check_zig_zag_symmetry(const BipartiteInstance& inst, const VertexId& u);

enum class StabilityVerdict { equal, differs, guard_violated };

// Deleting pi-side vertices X whose partners all rank before the probe's
// reference vertex leaves zig (probe on the sigma side) or zag (probe on
// the pi side) unchanged. The guard is evaluated first and reported on
// its own.
StabilityVerdict check_removal_stability(const ZigZagContext& ctx, const VertexSet& removed, const VertexId& probe);

// Same, for the context online_match(inst) builds over the instance orders.
StabilityVerdict check_removal_stability(const BipartiteInstance& inst, const VertexSet& removed,
                                         const VertexId& probe);

struct RankMoveReport {
  enum class Status { checked, skipped };
  Status status = Status::skipped;
  std::optional<VertexId> u;          // perfect-matching partner of v
  std::optional<VertexId> new_partner;  // u's partner after the move
  bool u_matched = false;
  // index sigma' (new_partner) <= index sigma (v), sigma' = move_to(sigma, v, i)
  bool holds_in_moved_order = false;
  // index sigma (new_partner) <= index sigma (v)
  bool holds_in_original_order = false;
};

// Moves the unmatched offline vertex v to index i and looks at where its
// perfect-matching partner ends up. A matched v is a skip, not a failure.
RankMoveReport check_rank_move(const BipartiteInstance& inst, const Matching& perfect, const VertexId& v,
                               std::size_t i);

}  // namespace ranklab
