#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ranklab/graph.hpp"
#include "ranklab/rational.hpp"
#include "ranklab/ranking.hpp"

namespace ranklab {

struct ExactOptions {
  std::size_t cap = 8;     // largest offline party enumerated exhaustively
  unsigned workers = 1;
};

// Hard ceiling on `cap`: counts are kept in 64-bit integers.
inline constexpr std::size_t kMaxEnumerable = 12;

// A probability kept exact; construction enforces 0 <= value <= 1.
class ExactProbability {
 public:
  explicit ExactProbability(Rational value);
  const Rational& value() const noexcept { return value_; }
  friend bool operator==(const ExactProbability&, const ExactProbability&) = default;

 private:
  Rational value_;
};

struct ExactReport {
  std::string fingerprint;
  std::string quantity;
  std::string parameters;  // e.g. "t=2"; empty when there are none
  Rational value;
  std::uint64_t sample_space_size = 0;
};

// Raw counts over every ranking of the offline party. Index r is rank r+1.
struct RankStatistics {
  std::size_t offline = 0;
  std::uint64_t permutations = 0;  // |V|!
  std::uint64_t size_sum = 0;
  std::vector<std::uint64_t> rank_matched;  // rankings whose rank-(r+1) vertex is covered
  std::vector<std::uint64_t> before_set;    // sum of #arrivals matched at rank <= r+1
  // Only filled when requested, over (ranking, v) pairs with v moved to rank r+1.
  std::vector<std::uint64_t> moved;
  // Only filled with a perfect matching: (ranking, v) with M*(v) matched at rank <= r+1.
  std::vector<std::uint64_t> pair_before;
};

struct StatisticsRequest {
  bool moved = false;
  std::optional<Matching> perfect;
};

// Throws CapExceeded when |sigma| > opts.cap, InvalidInput when opts.cap is
// above kMaxEnumerable.
RankStatistics rank_statistics(const BipartiteInstance& inst, const StatisticsRequest& request = {},
                               const ExactOptions& opts = {});

ExactReport exact_expected_size(const BipartiteInstance& inst, const ExactOptions& opts = {});

// Ranks t are 1-based; t outside 1..|sigma| throws PreconditionError.
ExactProbability rank_matched_prob(const BipartiteInstance& inst, std::size_t t, const ExactOptions& opts = {});
ExactProbability rank_matched_prob_moved(const BipartiteInstance& inst, std::size_t t, const ExactOptions& opts = {});
// m_star must be a perfect matching between the two declared parties.
ExactProbability matched_before_prob(const BipartiteInstance& inst, const Matching& m_star, std::size_t t,
                                     const ExactOptions& opts = {});
ExactReport expected_matched_before_count(const BipartiteInstance& inst, std::size_t t, const ExactOptions& opts = {});

// True when m covers every vertex of both orders, lies in the graph and the
// parties have equal size.
bool is_perfect_for(const BipartiteInstance& inst, const Matching& m);

struct Lemma3Row {
  std::size_t t = 0;
  Rational x;              // P(rank-t vertex matched)
  Rational moved;          // P of the moved-vertex variant
  Rational before;         // P(M*(v) matched at rank <= t)
  Rational expected_set;   // E #online vertices matched at rank <= t
  Rational prefix_sum;     // x_1 + ... + x_t
  bool equivalence = false;       // x == moved
  bool unmatched_le_before = false;  // 1 - moved <= before
  bool before_is_set_mean = false;   // before == expected_set / n
  bool set_is_prefix_sum = false;    // expected_set == prefix_sum
  bool inequality = false;           // 1 - x <= prefix_sum / n

  bool ok() const noexcept {
    return equivalence && unmatched_le_before && before_is_set_mean && set_is_prefix_sum && inequality;
  }
};

struct Lemma3Report {
  std::size_t n = 0;
  std::vector<Lemma3Row> rows;
  bool ok() const noexcept;
};

// Needs a perfect matching; without one the maximum matching is tried and
// PreconditionError thrown if it is not perfect.
Lemma3Report check_lemma3(const BipartiteInstance& inst, const Matching& m_star, const ExactOptions& opts = {});
Lemma3Report check_lemma3(const BipartiteInstance& inst, const ExactOptions& opts = {});

// 1 - (n/(n+1))^n. n == 0 throws PreconditionError.
double competitive_bound(std::uint64_t n);
Rational competitive_bound_exact(std::uint64_t n);

struct BoundVerdict {
  std::size_t n = 0;
  Rational expected;
  Rational ratio;
  Rational bound;
  bool vacuous = false;  // no edges to match
  bool holds = false;    // bound <= ratio

  // check_theorem4 only: x_1 + ... + x_n >= sum_s (n/(n+1))^s
  std::optional<bool> sum_bound;
  // check_theorem6 only: |online_match(H)| <= |online_match(G)| for every ranking,
  // H = make_perfect_matching(G, M), and the bound again on H.
  std::optional<bool> reduced_le_full;
  std::optional<bool> holds_on_reduced;

  bool ok() const noexcept {
    return vacuous || (holds && sum_bound.value_or(true) && reduced_le_full.value_or(true) &&
                       holds_on_reduced.value_or(true));
  }
};

// Requires a perfect matching (PreconditionError otherwise).
BoundVerdict check_theorem4(const BipartiteInstance& inst, const ExactOptions& opts = {});
// n = |max_card_matching(g)|; n == 0 is vacuous.
BoundVerdict check_theorem6(const BipartiteInstance& inst, const ExactOptions& opts = {});

// The instance induced on the vertices of a subgraph, orders kept relative.
BipartiteInstance restrict_instance(const BipartiteInstance& inst, const Graph& sub);

struct McEstimate {
  double mean = 0;
  std::uint64_t samples = 0;
  double sd = 0;  // sample standard deviation of |R|
  std::uint64_t seed = 0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

// Sample i shuffles the offline order with stream(seed, i), so the result
// does not depend on `workers`. samples == 0 throws PreconditionError.
McEstimate mc_expected_size(const BipartiteInstance& inst, std::uint64_t samples, std::uint64_t seed,
                            unsigned workers = 1);

}  // namespace ranklab
