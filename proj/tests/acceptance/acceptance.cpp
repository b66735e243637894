// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ranklab/error.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/instance_io.hpp"
#include "ranklab/lemmas.hpp"
#include "ranklab/probability.hpp"
#include "ranklab/rng.hpp"

using namespace ranklab;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(std::move(why));
  }
};

int failures = 0;

void report(int id, const Verdict& v) {
  std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << '\n';
  for (const auto& p : v.problems) std::cout << "    " << p << '\n';
  if (!v.pass) ++failures;
}

std::string replay(const BipartiteInstance& inst) { return "\n" + serialize_instance(inst); }

// Criterion-1 instances: 240 planted perfect matchings, 40 for each n in 1..6.
std::vector<PlantedInstance> perfect_instances() {
  std::vector<PlantedInstance> out;
  for (std::size_t k = 0; k < 240; ++k) {
    SplitMix64 rng = stream(2024, k);
    const double p = 0.05 + 0.85 * uniform01(rng);
    out.push_back(gen_perfect(1 + k % 6, p, rng()));
  }
  return out;
}

BipartiteInstance random_instance(std::uint64_t seed, std::uint64_t id, std::size_t max_side) {
  SplitMix64 rng = stream(seed, id);
  const std::size_t a = 1 + uniform_below(rng, max_side);
  const std::size_t b = 1 + uniform_below(rng, max_side);
  const double p = 0.1 + 0.8 * uniform01(rng);
  return gen_random(a, b, p, rng());
}

Verdict criterion1(const std::vector<PlantedInstance>& insts) {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& p : insts) {
    const auto r = check_theorem4(p.instance);
    ++checked;
    if (!r.ok()) {
      v.fail("ratio " + to_string(r.ratio) + " < bound " + to_string(r.bound) + replay(p.instance));
    }
  }
  v.detail = std::to_string(checked) + " perfect instances, n in 1..6, bound <= E|R|/n exactly";
  return v;
}

Verdict criterion2() {
  Verdict v;
  std::size_t checked = 0, vacuous = 0;
  for (std::uint64_t id = 0; id < 260; ++id) {
    const auto inst = random_instance(77, id, 6);
    const auto r = check_theorem6(inst);
    ++checked;
    if (r.vacuous) {
      ++vacuous;
      continue;
    }
    if (!r.ok()) v.fail("n " + std::to_string(r.n) + ", ratio " + to_string(r.ratio) + replay(inst));
  }
  if (checked - vacuous < 200) v.fail("only " + std::to_string(checked - vacuous) + " instances with an edge");
  v.detail = std::to_string(checked - vacuous) + " random instances <= 6+6 with n = |max matching| (" +
             std::to_string(vacuous) + " edgeless skipped), exact";
  return v;
}

Verdict criterion3(const std::vector<PlantedInstance>& insts) {
  Verdict v;
  std::size_t rows = 0;
  for (const auto& p : insts) {
    const auto r = check_lemma3(p.instance, p.planted);
    for (const auto& row : r.rows) {
      ++rows;
      if (!row.ok()) v.fail("t " + std::to_string(row.t) + " x " + to_string(row.x) + replay(p.instance));
    }
  }
  v.detail = std::to_string(rows) + " (instance, t) rows, inequality and all four chain links exact";
  return v;
}

// Criteria 4 and 5 share their trials.
struct RemovalTrials {
  Verdict dichotomy;
  Verdict cardinality;
};

RemovalTrials criteria4and5() {
  RemovalTrials out;
  std::uint64_t trials[2] = {0, 0}, paths[2] = {0, 0};
  auto check = [&](int side, const BipartiteInstance& inst, const VertexId& x, const RemovalDiff& d) {
    ++trials[side];
    const std::size_t m = d.before.size(), m2 = d.after.size();
    if (m2 > m || m - m2 > 1) {
      out.cardinality.fail("|M| " + std::to_string(m) + ", |M'| " + std::to_string(m2) + replay(inst));
    }
    if (d.is_equal()) {
      if (d.before != d.after) out.dichotomy.fail("'equal' verdict with different matchings" + replay(inst));
      return;
    }
    ++paths[side];
    const bool ok = d.path.front() == x &&
                    d.path.edge_set() == symmetric_difference(d.before.edges(), d.after.edges()) &&
                    is_alternating_path(d.path, d.before.edges()) && is_alternating_path(d.path, d.after.edges());
    if (!ok) out.dichotomy.fail("removing " + x.name() + ": path " + to_string(d.path) + replay(inst));
  };
  for (std::uint64_t id = 0; trials[0] < 1500 || trials[1] < 1500; ++id) {
    const auto inst = random_instance(4242, id, 8);
    try {
      for (const auto& u : inst.pi()) check(0, inst, u, removal_diff_online(inst, u));
      for (const auto& v : inst.sigma()) check(1, inst, v, removal_diff_offline(inst, v));
    } catch (const LemmaViolation& e) {
      out.dichotomy.fail(std::string(e.what()) + replay(inst));
    }
  }
  out.dichotomy.detail = std::to_string(trials[0]) + " online and " + std::to_string(trials[1]) +
                         " offline removals (" + std::to_string(paths[0]) + "/" + std::to_string(paths[1]) +
                         " gave a zig path = M xor M', alternating in both)";
  out.cardinality.detail = "|M| - |M'| in {0,1} on all " + std::to_string(trials[0] + trials[1]) + " removal trials";
  return out;
}

Verdict criterion6() {
  Verdict v;
  std::size_t instances = 0;
  std::uint64_t matchings = 0;
  for (std::uint64_t id = 0; id < 150; ++id) {
    const auto inst = random_instance(606, id, 5);
    const Matching m = online_match(inst);
    std::size_t satisfying = 0;
    bool unique_ok = true, symmetric = true;
    oracles::for_each_matching(inst.graph(), [&](const EdgeSet& s) {
      ++matchings;
      const Matching cand(s);
      const bool a = is_ranking_matching(inst.graph(), cand, inst.pi(), inst.sigma());
      if (a != is_ranking_matching(inst.graph(), cand, inst.sigma(), inst.pi())) symmetric = false;
      if (a) {
        ++satisfying;
        if (cand != m) unique_ok = false;
      }
    });
    ++instances;
    if (satisfying != 1 || !unique_ok) v.fail(std::to_string(satisfying) + " ranking matchings" + replay(inst));
    if (!symmetric) v.fail("party symmetry broken" + replay(inst));
  }
  v.detail = std::to_string(instances) + " instances <= 5+5, " + std::to_string(matchings) +
             " matchings enumerated; exactly one is a ranking matching, it is online_match, both party orders agree";
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::uint64_t probes = 0;
  for (std::uint64_t id = 0; probes < 1500; ++id) {
    const auto inst = random_instance(707, id, 8);
    const Matching m = online_match(inst);
    for (const auto& u : inst.pi()) {
      if (!m.covers(u)) continue;
      ++probes;
      if (!check_zig_zag_symmetry(inst, u)) v.fail("online " + u.name() + replay(inst));
    }
    const Matching swapped = online_match(inst.graph(), inst.sigma(), inst.pi());
    for (const auto& x : inst.sigma()) {
      if (!swapped.covers(x)) continue;
      ++probes;
      if (!zig_zag_symmetry_sides(inst.graph(), inst.sigma(), inst.pi(), x).equal()) {
        v.fail("offline " + x.name() + replay(inst));
      }
    }
  }
  const auto fig = fixtures::fig1();
  const auto sides = zig_zag_symmetry_sides(fig.graph(), fig.pi(), fig.sigma(), VertexId("u2"));
  const VertexPath expected{"u2", "v2", "u3", "v4", "u5", "v5", "u6"};
  auto with_u2 = [](const VertexPath& p) {
    std::vector<VertexId> vs{VertexId("u2")};
    vs.insert(vs.end(), p.vertices().begin(), p.vertices().end());
    return VertexPath(std::move(vs));
  };
  if (with_u2(sides.zig_side) != expected || with_u2(sides.zag_side) != expected) {
    v.fail("fig1: zig side " + to_string(sides.zig_side) + ", zag side " + to_string(sides.zag_side));
  }
  if (removal_diff_online(fig, VertexId("u2")).path != expected) v.fail("fig1: removal path differs");
  v.detail = std::to_string(probes) + " matched probes; fig1 u2 gives " + to_string(expected) + " on both sides";
  return v;
}

struct RankMoveCounts {
  std::uint64_t instances = 0, cases = 0, moved_ok = 0, original_ok = 0, unmatched = 0;
};

void rank_move_sweep(const PlantedInstance& p, RankMoveCounts& c, Verdict& v) {
  const auto& inst = p.instance;
  ++c.instances;
  const Matching m = online_match(inst);
  for (const auto& x : inst.sigma()) {
    if (m.covers(x)) continue;
    for (std::size_t i = 0; i < inst.sigma().size(); ++i) {
      const auto r = check_rank_move(inst, p.planted, x, i);
      ++c.cases;
      if (!r.u_matched) {
        ++c.unmatched;
        v.fail("u unmatched after moving " + x.name() + " to index " + std::to_string(i) + replay(inst));
      }
      c.moved_ok += r.holds_in_moved_order;
      c.original_ok += r.holds_in_original_order;
    }
  }
}

std::string survivors(const RankMoveCounts& c) {
  const bool moved = c.moved_ok == c.cases, original = c.original_ok == c.cases;
  return moved && original ? "both" : moved ? "moved-order only" : original ? "original-order only" : "none";
}

Verdict criterion8(const std::vector<PlantedInstance>& insts) {
  Verdict v;
  RankMoveCounts main;
  for (const auto& p : insts) {
    if (p.instance.sigma().size() <= 5) rank_move_sweep(p, main, v);
  }
  if (main.moved_ok != main.cases && main.original_ok != main.cases) v.fail("neither reading holds on every case");
  // a wider sweep at n = 3..5 with sparse extras, where unmatched vertices are common
  RankMoveCounts extra;
  Verdict side;
  for (std::uint64_t k = 0; k < 3000; ++k) {
    SplitMix64 rng = stream(8080, k);
    rank_move_sweep(gen_perfect(3 + k % 3, 0.1 + 0.5 * uniform01(rng), rng()), extra, side);
  }
  std::ostringstream os;
  os << main.instances << " instances n <= 5, " << main.cases << " (v unmatched, i) cases, u always matched: "
     << (main.unmatched == 0 ? "yes" : "no") << "; moved-order reading " << main.moved_ok << "/" << main.cases
     << ", original-order reading " << main.original_ok << "/" << main.cases << "; surviving: " << survivors(main)
     << " | wider sweep (" << extra.instances << " instances, " << extra.cases << " cases): moved-order "
     << extra.moved_ok << ", original-order " << extra.original_ok << ", u unmatched " << extra.unmatched
     << ", surviving: " << survivors(extra);
  v.detail = os.str();
  return v;
}

Verdict criterion9() {
  Verdict v;
  const double limit = 1 - std::exp(-1.0);
  const double gap = std::abs(competitive_bound(1000000) - limit);
  if (!(gap < 1e-6)) v.fail("gap at 10^6 is " + std::to_string(gap));
  double prev = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const double b = competitive_bound(n);
    if (!(b > prev)) {
      v.fail("not increasing at n = " + std::to_string(n));
      break;
    }
    prev = b;
  }
  const auto g = gamma_min_ratio(1);
  if (g.min_ratio != Rational(1)) v.fail("Q_1 = " + to_string(g.min_ratio));
  if (!(g.min_ratio >= competitive_bound_exact(1))) v.fail("Q_1 below 1/2");
  std::ostringstream os;
  os.precision(3);
  os << "gap at 10^6 = " << gap << ", strictly increasing on 1..10^4, Q_1 = " << to_string(g.min_ratio)
     << " over " << g.graphs << " graphs / " << g.instances << " instances, >= " << to_string(competitive_bound_exact(1));
  v.detail = os.str();
  return v;
}

Verdict criterion10() {
  Verdict v;
  constexpr std::uint64_t kSamples = 100000;
  int within = 0;
  bool identical = true;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto inst = random_instance(1010, k, 7);
    const double exact = to_double(exact_expected_size(inst).value);
    const auto est = mc_expected_size(inst, kSamples, 500 + k, 2);
    if (std::abs(est.mean - exact) <= 4 * est.sd / std::sqrt(static_cast<double>(kSamples))) ++within;
    if (!(mc_expected_size(inst, kSamples, 500 + k, 1) == est)) identical = false;
  }
  if (within < 19) v.fail(std::to_string(within) + "/20 within 4 sd/sqrt(S)");
  if (!identical) v.fail("reruns with the same seed differ");
  v.detail = std::to_string(within) + "/20 instances within 4 sd/sqrt(S) at 10^5 samples; same seed => identical (1 vs 2 workers)";
  return v;
}

Verdict criterion11() {
  Verdict v;
  std::ifstream in(fixtures::data_path("fig1.expected"), std::ios::binary);
  std::ostringstream golden;
  golden << in.rdbuf();
  const auto fig = fixtures::fig1();
  const Matching m = online_match(fig);
  const std::string first = format_matching(fig, m);
  const std::string second = format_matching(fixtures::fig1(), online_match(fixtures::fig1()));
  if (m != Matching{{"u1", "v1"}, {"u2", "v2"}, {"u3", "v4"}, {"u4", "v3"}, {"u5", "v5"}}) v.fail("wrong matching");
  if (m.covers(VertexId("u6")) || m.covers(VertexId("v6"))) v.fail("u6 or v6 matched");
  if (first != golden.str()) v.fail("output differs from the golden file:\n" + first);
  if (first != second) v.fail("output not stable across runs");
  v.detail = "fig1 gives {u1v1,u2v2,u3v4,u4v3,u5v5}, u6 and v6 unmatched, byte-identical to the golden file";
  return v;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto perfect = perfect_instances();
    report(1, criterion1(perfect));
    report(2, criterion2());
    report(3, criterion3(perfect));
    const auto removal = criteria4and5();
    report(4, removal.dichotomy);
    report(5, removal.cardinality);
    report(6, criterion6());
    report(7, criterion7());
    report(8, criterion8(perfect));
    report(9, criterion9());
    report(10, criterion10());
    report(11, criterion11());
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << '\n';
    return 1;
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << " (" << s
            << " s)\n";
  return failures == 0 ? 0 : 1;
}
