#include "ranklab/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>

#include "enumerate.hpp"
#include "ranklab/error.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/instance_io.hpp"
#include "ranklab/lemmas.hpp"
#include "ranklab/probability.hpp"
#include "ranklab/rng.hpp"
#include "ranklab/zigzag.hpp"

namespace ranklab {

namespace {

struct SuiteEntry {
  Suite suite;
  std::string_view name;
};

constexpr SuiteEntry kSuites[] = {
    {Suite::ranking_matching, "ranking-matching"},
    {Suite::lemma3, "lemma3"},
    {Suite::lemma5, "lemma5"},
    {Suite::lemma6, "lemma6"},
    {Suite::lemma7, "lemma7"},
    {Suite::lemma8, "lemma8"},
    {Suite::lemma9, "lemma9"},
    {Suite::rank_move, "rank-move"},
    {Suite::theorem4, "theorem4"},
    {Suite::theorem6, "theorem6"},
};

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& e : kSuites) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::string_view suite_name(Suite s) {
  for (const auto& e : kSuites) {
    if (e.suite == s) return e.name;
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (const auto& e : kSuites) {
    if (e.name == name) return e.suite;
  }
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

bool suite_needs_perfect(Suite s) { return s == Suite::lemma3 || s == Suite::theorem4 || s == Suite::rank_move; }

bool suite_is_exact(Suite s) { return s == Suite::lemma3 || s == Suite::theorem4 || s == Suite::theorem6; }

std::size_t default_max_side(Suite s) { return suite_is_exact(s) || s == Suite::rank_move ? 6 : 8; }

namespace {

// Salt for the per-instance generator that drives randomized probes, so it
// never coincides with the instance's own stream.
constexpr std::uint64_t kProbeSalt = 0x70726f6265ULL;

struct Outcome {
  std::uint64_t trials = 0;
  std::vector<std::string> failures;
  std::vector<ExperimentRow> rows;
  std::vector<std::string> notes;
  RankMoveTally tally;
};

struct Context {
  const BipartiteInstance& inst;
  const SuiteOptions& opts;
  std::size_t id;
  std::string label;
  bool verbose;  // file mode: keep per-probe notes
};

std::string describe(const Matching& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& e : m) {
    os << (first ? "" : ",") << e;
    first = false;
  }
  os << '}';
  return os.str();
}

// Every matching contained in g, by inclusion/exclusion over the edges.
void all_matchings(const std::vector<Edge>& edges, std::size_t k, EdgeSet& current, VertexSet& used,
                   const std::function<void(const EdgeSet&)>& emit) {
  if (k == edges.size()) {
    emit(current);
    return;
  }
  all_matchings(edges, k + 1, current, used, emit);
  const Edge& e = edges[k];
  if (used.count(e.first()) || used.count(e.second())) return;
  current.insert(e);
  used.insert(e.first());
  used.insert(e.second());
  all_matchings(edges, k + 1, current, used, emit);
  current.erase(e);
  used.erase(e.first());
  used.erase(e.second());
}

void check_ranking_matching(const Context& c, Outcome& out) {
  const auto& inst = c.inst;
  const Matching m = online_match(inst);
  ++out.trials;
  if (!(online_match(inst) == m)) out.failures.push_back("online_match is not deterministic");
  if (!is_subset(m.edges(), inst.graph().edges()) || !is_maximal_matching(inst.graph(), m)) {
    out.failures.push_back("online_match output is not a maximal matching inside the graph");
  }
  if (!is_ranking_matching(inst.graph(), m, inst.pi(), inst.sigma())) {
    out.failures.push_back("online_match output " + describe(m) + " is not a ranking matching");
  }
  if (!is_ranking_matching(inst.graph(), m, inst.sigma(), inst.pi())) {
    out.failures.push_back("party symmetry: " + describe(m) + " fails with the orders exchanged");
  }
  for (const auto& e : m) {
    EdgeSet rest = m.edges();
    rest.erase(e);
    const Graph h = remove_vertices(inst.graph(), VertexSet{e.first(), e.second()});
    if (!is_ranking_matching(h, Matching(rest), inst.pi(), inst.sigma())) {
      std::ostringstream msg;
      msg << "removing matched edge " << e << " breaks the ranking-matching property of the rest";
      out.failures.push_back(msg.str());
    }
  }

  if (inst.sigma().size() <= 5 && inst.pi().size() <= 5) {
    const std::vector<Edge> edges(inst.graph().begin(), inst.graph().end());
    EdgeSet current;
    VertexSet used;
    std::size_t satisfying = 0;
    bool found_m = false, symmetric = true;
    all_matchings(edges, 0, current, used, [&](const EdgeSet& cand) {
      const Matching candidate(cand);
      const bool a = is_ranking_matching(inst.graph(), candidate, inst.pi(), inst.sigma());
      const bool b = is_ranking_matching(inst.graph(), candidate, inst.sigma(), inst.pi());
      if (a != b) symmetric = false;
      if (a) {
        ++satisfying;
        if (candidate == m) found_m = true;
      }
    });
    if (satisfying != 1 || !found_m) {
      out.failures.push_back("uniqueness: " + std::to_string(satisfying) +
                             " matchings satisfy the ranking-matching specification");
    }
    if (!symmetric) out.failures.push_back("party symmetry fails on some matching of the graph");
    if (c.verbose) out.notes.push_back("uniqueness checked over every matching of the graph");
  }
  if (c.verbose) out.notes.push_back("online_match " + describe(m));
}

// Greedy maximal matching over the edges in a shuffled order.
Matching arbitrary_matching(const Graph& g, SplitMix64& rng) {
  std::vector<Edge> edges(g.begin(), g.end());
  shuffle(std::span<Edge>(edges), rng);
  EdgeSet m;
  VertexSet used;
  for (const auto& e : edges) {
    if (used.count(e.first()) || used.count(e.second())) continue;
    m.insert(e);
    used.insert(e.first());
    used.insert(e.second());
  }
  return Matching(std::move(m));
}

// pi-side vertices the guard admits for `probe`.
VertexSet guarded_candidates(const ZigZagContext& ctx, const VertexId& probe) {
  std::optional<std::size_t> reference;
  if (ctx.sigma.contains(probe)) {
    reference = ctx.sigma.index(probe);
  } else if (auto mate = ctx.matching.partner(probe)) {
    reference = ctx.sigma.index(*mate);
  }
  VertexSet out;
  for (const auto& x : ctx.pi) {
    auto mate = ctx.matching.partner(x);
    if (!mate || !reference || ctx.sigma.index(*mate) < *reference) out.insert(x);
  }
  return out;
}

void check_lemma5(const Context& c, Outcome& out) {
  SplitMix64 rng = stream(c.opts.seed ^ kProbeSalt, c.id);
  const ZigZagContext ranked = ranking_context(c.inst);
  const ZigZagContext arbitrary{c.inst.graph(), arbitrary_matching(c.inst.graph(), rng), c.inst.pi(),
                                c.inst.sigma()};
  for (const ZigZagContext* ctx : {&ranked, &arbitrary}) {
    const char* which = ctx == &ranked ? "ranking matching" : "arbitrary matching";
    std::vector<VertexId> probes(ctx->sigma.begin(), ctx->sigma.end());
    probes.insert(probes.end(), ctx->pi.begin(), ctx->pi.end());
    for (const auto& probe : probes) {
      const VertexSet full = guarded_candidates(*ctx, probe);
      VertexSet some;
      for (const auto& x : full) {
        if (rng() & 1U) some.insert(x);
      }
      for (const VertexSet* xs : std::array<const VertexSet*, 2>{&full, &some}) {
        ++out.trials;
        const StabilityVerdict verdict = check_removal_stability(*ctx, *xs, probe);
        if (verdict != StabilityVerdict::equal) {
          std::ostringstream msg;
          msg << which << ", probe " << probe << ", removing " << xs->size() << " vertices: "
              << (verdict == StabilityVerdict::differs ? "path changed" : "guard rejected a guarded set");
          out.failures.push_back(msg.str());
        }
      }
    }
  }
}

void check_lemma6(const Context& c, Outcome& out) {
  const auto& inst = c.inst;
  auto probe = [&](const Permutation& removed_order, const Permutation& other_order, const char* side) {
    const Matching m = online_match(inst.graph(), removed_order, other_order);
    for (const auto& x : removed_order) {
      if (!m.covers(x)) continue;
      ++out.trials;
      const SymmetrySides sides = zig_zag_symmetry_sides(inst.graph(), removed_order, other_order, x);
      if (!sides.equal()) {
        out.failures.push_back(std::string(side) + " " + x.name() + " removed: zig " + to_string(sides.zig_side) +
                               " vs zag " + to_string(sides.zag_side));
      } else if (c.verbose) {
        out.notes.push_back(std::string(side) + " " + x.name() + ": both sides " + to_string(sides.zig_side));
      }
    }
  };
  probe(inst.pi(), inst.sigma(), "online");
  probe(inst.sigma(), inst.pi(), "offline");
}

void check_removal(const Context& c, Outcome& out, bool online_side) {
  const auto& inst = c.inst;
  const Permutation& order = online_side ? inst.pi() : inst.sigma();
  for (const auto& x : order) {
    ++out.trials;
    RemovalDiff d;
    try {
      d = online_side ? removal_diff_online(inst, x) : removal_diff_offline(inst, x);
    } catch (const LemmaViolation& e) {
      out.failures.push_back(e.what());
      continue;
    }
    if (d.is_equal()) {
      if (c.verbose) out.notes.push_back(x.name() + ": equal");
      continue;
    }
    const std::string where = x.name() + ": path " + to_string(d.path);
    if (d.path.front() != x) out.failures.push_back(where + " does not start at the removed vertex");
    if (!is_alternating_path(d.path, d.before.edges())) out.failures.push_back(where + " not alternating w.r.t. M");
    if (!is_alternating_path(d.path, d.after.edges())) out.failures.push_back(where + " not alternating w.r.t. M'");
    if (c.verbose) out.notes.push_back(where);
  }
}

void check_lemma9(const Context& c, Outcome& out) {
  const auto& inst = c.inst;
  for (int side = 0; side < 2; ++side) {
    const Permutation& order = side == 0 ? inst.pi() : inst.sigma();
    for (const auto& x : order) {
      ++out.trials;
      const Matching m = online_match(inst);
      const Matching m2 = online_match(remove_vertices(inst.graph(), VertexSet{x}), inst.pi(), inst.sigma());
      if (m2.size() > m.size() || m.size() - m2.size() > 1) {
        out.failures.push_back("removing " + x.name() + ": |M| = " + std::to_string(m.size()) +
                               ", |M'| = " + std::to_string(m2.size()));
      }
      // all vertices of the zig path but the last are covered by M
      const ZigZagContext ctx = side == 0 ? ranking_context(inst).swapped() : ranking_context(inst);
      const VertexPath p = zig(ctx, x);
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        if (!m.covers(p.vertices()[k])) {
          out.failures.push_back("zig from " + x.name() + " has an uncovered inner vertex " + p.vertices()[k].name());
        }
      }
    }
  }
  // make-perfect: the reduced graph never yields a larger ranking matching
  ++out.trials;
  const Matching max = max_card_matching(inst.graph());
  const Graph h = make_perfect_matching(inst.graph(), max);
  const std::size_t full = online_match(inst).size();
  const std::size_t reduced = online_match(h, inst.pi(), inst.sigma()).size();
  if (reduced > full) {
    out.failures.push_back("make_perfect_matching: " + std::to_string(reduced) + " > " + std::to_string(full));
  }
  if (c.verbose) out.notes.push_back("|online_match| full " + std::to_string(full) + ", reduced " +
                                     std::to_string(reduced));
}

void check_rank_move_suite(const Context& c, Outcome& out) {
  const auto& inst = c.inst;
  const Matching perfect = max_card_matching(inst.graph());
  if (!is_perfect_for(inst, perfect)) {
    out.failures.push_back("rank-move needs a perfect matching");
    return;
  }
  for (const auto& v : inst.sigma()) {
    for (std::size_t i = 0; i < inst.sigma().size(); ++i) {
      const RankMoveReport r = check_rank_move(inst, perfect, v, i);
      if (r.status == RankMoveReport::Status::skipped) {
        ++out.tally.skipped;
        continue;
      }
      ++out.trials;
      ++out.tally.checked;
      if (!r.u_matched) {
        ++out.tally.u_unmatched;
        out.failures.push_back(v.name() + " moved to index " + std::to_string(i) + ": " + r.u->name() +
                               " left unmatched");
        continue;
      }
      out.tally.moved_order_holds += r.holds_in_moved_order;
      out.tally.original_order_holds += r.holds_in_original_order;
      out.tally.neither_holds += !r.holds_in_moved_order && !r.holds_in_original_order;
      if (c.verbose) {
        out.notes.push_back(v.name() + " to rank " + std::to_string(i + 1) + ": " + r.u->name() + " matched to " +
                            r.new_partner->name() + " (moved order " + (r.holds_in_moved_order ? "ok" : "violated") +
                            ", original order " + (r.holds_in_original_order ? "ok" : "violated") + ")");
      }
    }
  }
}

std::string lemma3_failure(const Lemma3Row& r) {
  std::ostringstream os;
  os << "t=" << r.t << ": x_t=" << to_string(r.x) << " moved=" << to_string(r.moved)
     << " before=" << to_string(r.before) << " E|set|=" << to_string(r.expected_set)
     << " prefix=" << to_string(r.prefix_sum);
  if (!r.equivalence) os << " [rank/moved differ]";
  if (!r.unmatched_le_before) os << " [1-moved > before]";
  if (!r.before_is_set_mean) os << " [before != E|set|/n]";
  if (!r.set_is_prefix_sum) os << " [E|set| != prefix sum]";
  if (!r.inequality) os << " [1-x_t > prefix/n]";
  return os.str();
}

ExperimentRow bound_row(const Context& c, const BoundVerdict& v, double ms) {
  ExperimentRow row;
  row.instance_id = c.label;
  row.n = v.n;
  row.mode = "exact";
  row.expected_size = to_fraction(v.expected);
  row.ratio = v.vacuous ? "" : to_fraction(v.ratio);
  row.bound = v.vacuous ? "" : to_fraction(v.bound);
  row.verdict = v.vacuous ? "vacuous" : (v.ok() ? "pass" : "fail");
  row.seed = c.opts.seed;
  row.runtime_ms = ms;
  return row;
}

void check_exact(const Context& c, Outcome& out, Suite s) {
  const ExactOptions eo{c.opts.cap, 1};
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  if (s == Suite::lemma3) {
    const Lemma3Report r = check_lemma3(c.inst, eo);
    for (const auto& row : r.rows) {
      ++out.trials;
      if (!row.ok()) out.failures.push_back(lemma3_failure(row));
      if (c.verbose) out.notes.push_back(lemma3_failure(row));
    }
    return;
  }
  const BoundVerdict v = s == Suite::theorem4 ? check_theorem4(c.inst, eo) : check_theorem6(c.inst, eo);
  ++out.trials;
  out.rows.push_back(bound_row(c, v, elapsed()));
  if (!v.ok()) {
    std::string msg = "bound " + to_string(v.bound) + " > ratio " + to_string(v.ratio);
    if (v.sum_bound == false) msg += "; sum bound fails";
    if (v.reduced_le_full == false) msg += "; reduced graph gave a larger matching";
    if (v.holds_on_reduced == false) msg += "; bound fails on the reduced graph";
    out.failures.push_back(msg);
  }
}

Outcome check_instance(Suite s, const Context& c) {
  Outcome out;
  switch (s) {
    case Suite::ranking_matching: check_ranking_matching(c, out); break;
    case Suite::lemma5: check_lemma5(c, out); break;
    case Suite::lemma6: check_lemma6(c, out); break;
    case Suite::lemma7: check_removal(c, out, true); break;
    case Suite::lemma8: check_removal(c, out, false); break;
    case Suite::lemma9: check_lemma9(c, out); break;
    case Suite::rank_move: check_rank_move_suite(c, out); break;
    case Suite::lemma3:
    case Suite::theorem4:
    case Suite::theorem6: check_exact(c, out, s); break;
  }
  return out;
}

std::string replay_text(Suite s, const SuiteOptions& opts, std::size_t id, const std::string& message,
                        const BipartiteInstance& inst) {
  std::ostringstream os;
  os << "# suite " << suite_name(s) << ", seed " << opts.seed << ", instance " << id << '\n';
  os << "# " << message << '\n';
  os << serialize_instance(inst);
  return os.str();
}

void absorb(SuiteReport& report, Outcome&& o, std::size_t id, const BipartiteInstance& inst, const SuiteOptions& opts) {
  ++report.instances;
  report.trials += o.trials;
  for (auto& f : o.failures) {
    report.failures.push_back({id, f, replay_text(report.suite, opts, id, f, inst)});
  }
  for (auto& r : o.rows) report.rows.push_back(std::move(r));
  for (auto& n : o.notes) report.notes.push_back(std::move(n));
  auto& t = report.rank_move;
  t.checked += o.tally.checked;
  t.skipped += o.tally.skipped;
  t.u_unmatched += o.tally.u_unmatched;
  t.moved_order_holds += o.tally.moved_order_holds;
  t.original_order_holds += o.tally.original_order_holds;
  t.neither_holds += o.tally.neither_holds;
}

// Rank-move passes when u is always matched and one reading covers every case.
void finish(SuiteReport& report) {
  if (report.suite != Suite::rank_move) return;
  const auto& t = report.rank_move;
  if (t.checked > 0 && !t.moved_order_survives() && !t.original_order_survives()) {
    report.failures.push_back({0, "neither reading of the rank bound holds on every case", ""});
  }
}

}  // namespace

BipartiteInstance suite_instance(Suite s, const SuiteOptions& opts, std::size_t id) {
  const std::size_t side = opts.max_side.value_or(default_max_side(s));
  if (side == 0) throw InvalidInput("max side must be at least 1");
  SplitMix64 rng = stream(opts.seed, id);
  const double p = opts.edge_prob.value_or(0.1 + 0.8 * uniform01(rng));
  if (suite_needs_perfect(s)) {
    const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(rng, side));
    return gen_perfect(n, p, rng()).instance;
  }
  const std::size_t n_offline = 1 + static_cast<std::size_t>(uniform_below(rng, side));
  const std::size_t n_online = 1 + static_cast<std::size_t>(uniform_below(rng, side));
  return gen_random(n_offline, n_online, p, rng());
}

SuiteReport run_suite(Suite s, const BipartiteInstance& inst, const SuiteOptions& opts, const std::string& label) {
  SuiteReport report;
  report.suite = s;
  const Context c{inst, opts, 0, label, true};
  absorb(report, check_instance(s, c), 0, inst, opts);
  finish(report);
  return report;
}

SuiteReport run_random_suite(Suite s, const SuiteOptions& opts) {
  struct Shard {
    BipartiteInstance inst;
    Outcome outcome;
  };
  auto shards = detail::run_tasks<Shard>(opts.count, opts.workers, [&](std::size_t id) {
    Shard sh{suite_instance(s, opts, id), {}};
    const Context c{sh.inst, opts, id, std::to_string(id), false};
    sh.outcome = check_instance(s, c);
    return sh;
  });
  SuiteReport report;
  report.suite = s;
  for (std::size_t id = 0; id < shards.size(); ++id) absorb(report, std::move(shards[id].outcome), id, shards[id].inst, opts);
  finish(report);
  return report;
}

}  // namespace ranklab
