#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ranklab/csv.hpp"
#include "ranklab/ranking.hpp"

namespace ranklab {

enum class Suite {
  ranking_matching,
  lemma3,
  lemma5,
  lemma6,
  lemma7,
  lemma8,
  lemma9,
  rank_move,
  theorem4,
  theorem6,
};

const std::vector<std::string_view>& suite_names();
std::string_view suite_name(Suite s);
// Throws InvalidInput for an unknown name.
Suite parse_suite(std::string_view name);

// Suites that enumerate rankings exactly need a perfect matching, or
// enumerate the offline party, and default to smaller instances.
bool suite_needs_perfect(Suite s);
bool suite_is_exact(Suite s);
std::size_t default_max_side(Suite s);

struct SuiteOptions {
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_side;  // per party; default_max_side when unset
  std::optional<double> edge_prob;      // drawn per instance from [0.1, 0.9) when unset
  std::size_t cap = 8;
  unsigned workers = 1;
};

struct SuiteFailure {
  std::size_t instance = 0;
  std::string message;
  std::string replay;  // self-contained instance file
};

// Tallies of the rank-move suite, one per (v unmatched, i) case.
struct RankMoveTally {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t u_unmatched = 0;
  std::uint64_t moved_order_holds = 0;
  std::uint64_t original_order_holds = 0;
  std::uint64_t neither_holds = 0;

  bool moved_order_survives() const noexcept { return checked == moved_order_holds; }
  bool original_order_survives() const noexcept { return checked == original_order_holds; }
};

struct SuiteReport {
  Suite suite{};
  std::size_t instances = 0;
  std::uint64_t trials = 0;  // probes, removals, ranks, ... depending on the suite
  std::vector<SuiteFailure> failures;
  std::vector<ExperimentRow> rows;  // theorem suites only
  std::vector<std::string> notes;   // per-probe detail in file mode
  RankMoveTally rank_move;

  bool passed() const noexcept { return failures.empty(); }
};

// The (deterministic) instance `id` of a randomized run.
BipartiteInstance suite_instance(Suite s, const SuiteOptions& opts, std::size_t id);

// Single instance, e.g. from a file; `label` names it in rows and notes.
SuiteReport run_suite(Suite s, const BipartiteInstance& inst, const SuiteOptions& opts = {},
                      const std::string& label = "file");

// opts.count random instances, sharded over opts.workers and merged in
// instance order.
SuiteReport run_random_suite(Suite s, const SuiteOptions& opts = {});

}  // namespace ranklab
