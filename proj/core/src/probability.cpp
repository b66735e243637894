#include "ranklab/probability.hpp"

#include <cmath>
#include <string>

#include "enumerate.hpp"
#include "ranklab/error.hpp"
#include "ranklab/instance_io.hpp"
#include "ranklab/kernel.hpp"
#include "ranklab/rng.hpp"

namespace ranklab {

ExactProbability::ExactProbability(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) throw InvalidInput("probability out of [0,1]: " + to_string(value_));
}

bool is_perfect_for(const BipartiteInstance& inst, const Matching& m) {
  if (inst.sigma().size() != inst.pi().size() || m.size() != inst.sigma().size()) return false;
  if (!is_subset(m.edges(), inst.graph().edges())) return false;
  for (const auto& v : inst.sigma()) {
    if (!m.covers(v)) return false;
  }
  for (const auto& u : inst.pi()) {
    if (!m.covers(u)) return false;
  }
  return true;
}

namespace {

void check_cap(const BipartiteInstance& inst, const ExactOptions& opts) {
  if (opts.cap > kMaxEnumerable) {
    throw InvalidInput("enumeration cap " + std::to_string(opts.cap) + " is above the supported maximum " +
                       std::to_string(kMaxEnumerable));
  }
  if (inst.sigma().size() > opts.cap) {
    throw CapExceeded(std::to_string(inst.sigma().size()) + " offline vertices exceed the enumeration cap " +
                      std::to_string(opts.cap) + "; use Monte Carlo instead");
  }
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_rank(const BipartiteInstance& inst, std::size_t t) {
  if (t < 1 || t > inst.sigma().size()) {
    throw PreconditionError("rank " + std::to_string(t) + " outside 1.." + std::to_string(inst.sigma().size()));
  }
}

struct StatsAcc {
  std::uint64_t size_sum = 0;
  std::vector<std::uint64_t> rank_matched, before_set, moved, pair_before;

  void merge(const StatsAcc& o) {
    size_sum += o.size_sum;
    auto add = [](std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    };
    add(rank_matched, o.rank_matched);
    add(before_set, o.before_set);
    add(moved, o.moved);
    add(pair_before, o.pair_before);
  }
};

// into[r] += hist[0] + ... + hist[r]
void add_prefix_counts(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& hist) {
  std::uint64_t running = 0;
  for (std::size_t r = 0; r < into.size(); ++r) {
    running += hist[r];
    into[r] += running;
  }
}

}  // namespace

RankStatistics rank_statistics(const BipartiteInstance& inst, const StatisticsRequest& request,
                               const ExactOptions& opts) {
  check_cap(inst, opts);
  const std::size_t n = inst.sigma().size();
  const IndexedInstance kernel(inst);

  // Arrival index of M*(v) for every offline index v.
  std::vector<std::size_t> star_arrival;
  if (request.perfect) {
    if (!is_perfect_for(inst, *request.perfect)) {
      throw PreconditionError("supplied matching is not a perfect matching of the instance");
    }
    for (const auto& v : inst.sigma()) star_arrival.push_back(inst.pi().index(*request.perfect->partner(v)));
  }

  auto make_acc = [&] {
    StatsAcc acc;
    acc.rank_matched.assign(n, 0);
    acc.before_set.assign(n, 0);
    acc.moved.assign(request.moved ? n : 0, 0);
    acc.pair_before.assign(request.perfect ? n : 0, 0);
    return acc;
  };

  auto visit = [&](StatsAcc& acc, const std::vector<std::uint8_t>& ranking) {
    std::vector<std::int8_t> partner(kernel.online_count());
    std::vector<std::size_t> rank_of(n);
    for (std::size_t r = 0; r < n; ++r) rank_of[ranking[r]] = r;
    acc.size_sum += kernel.match(ranking, partner);

    std::uint64_t covered = 0;
    std::vector<std::uint64_t> hist(n, 0);
    for (const std::int8_t p : partner) {
      if (p == IndexedInstance::kUnmatched) continue;
      covered |= std::uint64_t{1} << p;
      ++hist[rank_of[static_cast<std::size_t>(p)]];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (covered >> ranking[r] & 1U) ++acc.rank_matched[r];
    }
    add_prefix_counts(acc.before_set, hist);

    if (request.perfect) {
      std::vector<std::uint64_t> star_hist(n, 0);
      for (std::size_t v = 0; v < n; ++v) {
        const std::int8_t p = partner[star_arrival[v]];
        if (p != IndexedInstance::kUnmatched) ++star_hist[rank_of[static_cast<std::size_t>(p)]];
      }
      add_prefix_counts(acc.pair_before, star_hist);
    }

    if (request.moved && n > 0) {
      std::vector<std::uint8_t> rest(n - 1), moved(n);
      std::vector<std::int8_t> moved_partner(kernel.online_count());
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t k = 0;
        for (const std::uint8_t w : ranking) {
          if (w != v) rest[k++] = w;
        }
        for (std::size_t r = 0; r < n; ++r) {
          // moved = rest with v inserted at index r
          std::copy(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(r), moved.begin());
          moved[r] = static_cast<std::uint8_t>(v);
          std::copy(rest.begin() + static_cast<std::ptrdiff_t>(r), rest.end(),
                    moved.begin() + static_cast<std::ptrdiff_t>(r) + 1);
          kernel.match(moved, moved_partner);
          for (const std::int8_t p : moved_partner) {
            if (p == static_cast<std::int8_t>(v)) {
              ++acc.moved[r];
              break;
            }
          }
        }
      }
    }
  };

  StatsAcc acc = detail::for_each_ranking<StatsAcc>(n, opts.workers, make_acc, visit);
  RankStatistics out;
  out.offline = n;
  out.permutations = factorial(n);
  out.size_sum = acc.size_sum;
  out.rank_matched = std::move(acc.rank_matched);
  out.before_set = std::move(acc.before_set);
  out.moved = std::move(acc.moved);
  out.pair_before = std::move(acc.pair_before);
  return out;
}

ExactReport exact_expected_size(const BipartiteInstance& inst, const ExactOptions& opts) {
  const RankStatistics s = rank_statistics(inst, {}, opts);
  return {fingerprint(inst), "expected_size", "", Rational(s.size_sum, s.permutations), s.permutations};
}

ExactProbability rank_matched_prob(const BipartiteInstance& inst, std::size_t t, const ExactOptions& opts) {
  check_rank(inst, t);
  const RankStatistics s = rank_statistics(inst, {}, opts);
  return ExactProbability(Rational(s.rank_matched[t - 1], s.permutations));
}

ExactProbability rank_matched_prob_moved(const BipartiteInstance& inst, std::size_t t, const ExactOptions& opts) {
  check_rank(inst, t);
  const RankStatistics s = rank_statistics(inst, {.moved = true, .perfect = std::nullopt}, opts);
  return ExactProbability(Rational(s.moved[t - 1], s.permutations * s.offline));
}

ExactProbability matched_before_prob(const BipartiteInstance& inst, const Matching& m_star, std::size_t t,
                                     const ExactOptions& opts) {
  check_rank(inst, t);
  const RankStatistics s = rank_statistics(inst, {.moved = false, .perfect = m_star}, opts);
  return ExactProbability(Rational(s.pair_before[t - 1], s.permutations * s.offline));
}

ExactReport expected_matched_before_count(const BipartiteInstance& inst, std::size_t t, const ExactOptions& opts) {
  check_rank(inst, t);
  const RankStatistics s = rank_statistics(inst, {}, opts);
  return {fingerprint(inst), "expected_matched_before_count", "t=" + std::to_string(t),
          Rational(s.before_set[t - 1], s.permutations), s.permutations};
}

bool Lemma3Report::ok() const noexcept {
  for (const auto& row : rows) {
    if (!row.ok()) return false;
  }
  return true;
}

Lemma3Report check_lemma3(const BipartiteInstance& inst, const Matching& m_star, const ExactOptions& opts) {
  const RankStatistics s = rank_statistics(inst, {.moved = true, .perfect = m_star}, opts);
  Lemma3Report out;
  out.n = s.offline;
  const Rational n(out.n);
  Rational prefix = 0;
  for (std::size_t t = 1; t <= out.n; ++t) {
    Lemma3Row row;
    row.t = t;
    row.x = Rational(s.rank_matched[t - 1], s.permutations);
    row.moved = Rational(s.moved[t - 1], s.permutations * s.offline);
    row.before = Rational(s.pair_before[t - 1], s.permutations * s.offline);
    row.expected_set = Rational(s.before_set[t - 1], s.permutations);
    prefix += row.x;
    row.prefix_sum = prefix;
    row.equivalence = row.x == row.moved;
    row.unmatched_le_before = 1 - row.moved <= row.before;
    row.before_is_set_mean = row.before == row.expected_set / n;
    row.set_is_prefix_sum = row.expected_set == row.prefix_sum;
    row.inequality = 1 - row.x <= row.prefix_sum / n;
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

Matching require_perfect(const BipartiteInstance& inst) {
  Matching m = max_card_matching(inst.graph());
  if (!is_perfect_for(inst, m)) throw PreconditionError("instance has no perfect matching");
  return m;
}

}  // namespace

Lemma3Report check_lemma3(const BipartiteInstance& inst, const ExactOptions& opts) {
  return check_lemma3(inst, require_perfect(inst), opts);
}

double competitive_bound(std::uint64_t n) {
  if (n == 0) throw PreconditionError("competitive bound needs n >= 1");
  const double x = static_cast<double>(n);
  return -std::expm1(x * std::log1p(-1.0 / (x + 1.0)));
}

Rational competitive_bound_exact(std::uint64_t n) {
  if (n == 0) throw PreconditionError("competitive bound needs n >= 1");
  const auto e = static_cast<unsigned>(n);
  return 1 - Rational(boost::multiprecision::pow(BigInt(n), e), boost::multiprecision::pow(BigInt(n + 1), e));
}

BoundVerdict check_theorem4(const BipartiteInstance& inst, const ExactOptions& opts) {
  check_cap(inst, opts);
  require_perfect(inst);
  const RankStatistics s = rank_statistics(inst, {}, opts);
  BoundVerdict out;
  out.n = s.offline;
  if (out.n == 0) {
    out.vacuous = true;
    return out;
  }
  out.expected = Rational(s.size_sum, s.permutations);
  out.ratio = out.expected / out.n;
  out.bound = competitive_bound_exact(out.n);
  out.holds = out.bound <= out.ratio;

  const Rational q(out.n, out.n + 1);
  Rational power = 1, geometric = 0, x_sum = 0;
  for (std::size_t t = 0; t < out.n; ++t) {
    power *= q;
    geometric += power;
    x_sum += Rational(s.rank_matched[t], s.permutations);
  }
  out.sum_bound = x_sum >= geometric;
  return out;
}

BipartiteInstance restrict_instance(const BipartiteInstance& inst, const Graph& sub) {
  const VertexSet keep = sub.vertices();
  std::vector<VertexId> sigma, pi;
  for (const auto& v : inst.sigma()) {
    if (keep.count(v)) sigma.push_back(v);
  }
  for (const auto& u : inst.pi()) {
    if (keep.count(u)) pi.push_back(u);
  }
  return BipartiteInstance(sub, Permutation(std::move(sigma)), Permutation(std::move(pi)));
}

BoundVerdict check_theorem6(const BipartiteInstance& inst, const ExactOptions& opts) {
  check_cap(inst, opts);
  const Matching m = max_card_matching(inst.graph());
  BoundVerdict out;
  out.n = m.size();
  if (out.n == 0) {
    out.vacuous = true;
    return out;
  }
  const Graph h = make_perfect_matching(inst.graph(), m);
  const IndexedInstance full(inst);
  const IndexedInstance reduced(inst.with_graph(h));

  struct Acc {
    std::uint64_t full_sum = 0, reduced_sum = 0;
    bool le = true;
    void merge(const Acc& o) {
      full_sum += o.full_sum;
      reduced_sum += o.reduced_sum;
      le = le && o.le;
    }
  };
  const Acc acc = detail::for_each_ranking<Acc>(
      inst.sigma().size(), opts.workers, [] { return Acc{}; },
      [&](Acc& a, const std::vector<std::uint8_t>& ranking) {
        std::vector<std::int8_t> partner(full.online_count());
        const std::size_t g_size = full.match(ranking, partner);
        const std::size_t h_size = reduced.match(ranking, partner);
        a.full_sum += g_size;
        a.reduced_sum += h_size;
        if (h_size > g_size) a.le = false;
      });

  const std::uint64_t perms = factorial(inst.sigma().size());
  out.expected = Rational(acc.full_sum, perms);
  out.ratio = out.expected / out.n;
  out.bound = competitive_bound_exact(out.n);
  out.holds = out.bound <= out.ratio;
  out.reduced_le_full = acc.le;
  // A uniform ranking of V restricts to a uniform ranking of V(H).
  out.holds_on_reduced = out.bound <= Rational(acc.reduced_sum, perms) / out.n;
  return out;
}

McEstimate mc_expected_size(const BipartiteInstance& inst, std::uint64_t samples, std::uint64_t seed,
                            unsigned workers) {
  if (samples == 0) throw PreconditionError("Monte Carlo needs at least one sample");
  const IndexedInstance kernel(inst);
  const std::size_t n = inst.sigma().size();
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;

  struct Sums {
    std::uint64_t sum = 0, sum_sq = 0;
  };
  const auto parts = detail::run_tasks<Sums>(static_cast<std::size_t>(chunks), workers, [&](std::size_t c) {
    Sums s;
    std::vector<std::uint8_t> ranking(n);
    std::vector<std::int8_t> partner(kernel.online_count());
    const std::uint64_t end = std::min<std::uint64_t>(samples, (c + 1) * kChunk);
    for (std::uint64_t i = c * kChunk; i < end; ++i) {
      for (std::size_t k = 0; k < n; ++k) ranking[k] = static_cast<std::uint8_t>(k);
      SplitMix64 rng = stream(seed, i);
      shuffle(std::span<std::uint8_t>(ranking), rng);
      const std::uint64_t size = kernel.match(ranking, partner);
      s.sum += size;
      s.sum_sq += size * size;
    }
    return s;
  });

  Uint128 sum = 0, sum_sq = 0;
  for (const auto& p : parts) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.mean = static_cast<double>(sum) / static_cast<double>(samples);
  if (samples > 1) {
    // samples * sum_sq - sum^2 is exact and never negative.
    const Uint128 spread = static_cast<Uint128>(samples) * sum_sq - sum * sum;
    const double denom = static_cast<double>(samples) * static_cast<double>(samples - 1);
    out.sd = std::sqrt(static_cast<double>(spread) / denom);
  }
  return out;
}

}  // namespace ranklab
