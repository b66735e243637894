#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ranklab/csv.hpp"
#include "ranklab/error.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/instance_io.hpp"
#include "ranklab/probability.hpp"
#include "ranklab/suites.hpp"

using namespace ranklab;

namespace {

constexpr int kPass = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

std::uint64_t default_seed() {
  const char* env = std::getenv("RANKLAB_SEED");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw InvalidInput(std::string("RANKLAB_SEED is not an unsigned integer: ") + env);
  return v;
}

struct CsvSink {
  std::string path;
  bool to_stdout = false;

  bool wanted() const { return to_stdout || !path.empty(); }

  void write(const std::vector<ExperimentRow>& rows) const {
    if (!path.empty()) {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw InvalidInput("cannot write " + path);
      write_csv(out, rows);
    }
    if (to_stdout) write_csv(std::cout, rows);
  }
};

void add_csv_options(CLI::App* cmd, CsvSink& sink) {
  cmd->add_option("--out", sink.path, "Write CSV rows to this file");
  cmd->add_flag("--csv", sink.to_stdout, "Print CSV rows instead of the summary");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string label_of(const std::string& file) { return std::filesystem::path(file).stem().string(); }

// run ------------------------------------------------------------------------

int cmd_run(const std::string& file) {
  const auto inst = read_instance_file(file);
  std::cout << format_matching(inst, online_match(inst));
  return kPass;
}

// exact ----------------------------------------------------------------------

struct ExactArgs {
  std::string file;
  std::size_t cap = 8;
  unsigned workers = 1;
  CsvSink csv;
};

int cmd_exact(const ExactArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const auto inst = read_instance_file(a.file);
  const auto r = exact_expected_size(inst, {a.cap, a.workers});
  const std::size_t n = max_card_matching(inst.graph()).size();

  ExperimentRow row;
  row.instance_id = label_of(a.file);
  row.n = n;
  row.mode = "exact";
  row.expected_size = to_fraction(r.value);
  if (n > 0) {
    const Rational ratio = r.value / n;
    const Rational bound = competitive_bound_exact(n);
    row.ratio = to_fraction(ratio);
    row.bound = to_fraction(bound);
    row.verdict = bound <= ratio ? "pass" : "fail";
  } else {
    row.verdict = "vacuous";
  }
  row.runtime_ms = elapsed_ms(start);

  if (a.csv.wanted()) a.csv.write({row});
  if (!a.csv.to_stdout) {
    std::cout << "fingerprint " << r.fingerprint << '\n';
    std::cout << "expected-size " << to_string(r.value) << " (" << format_real(to_double(r.value)) << ")\n";
    std::cout << "rankings " << r.sample_space_size << '\n';
    std::cout << "max-matching " << n << '\n';
    if (n > 0) std::cout << "ratio " << to_string(r.value / n) << " bound " << row.bound << ' ' << row.verdict << '\n';
  }
  return row.verdict == "fail" ? kPropertyFailure : kPass;
}

// mc -------------------------------------------------------------------------

struct McArgs {
  std::string file;
  std::uint64_t samples = 100000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  CsvSink csv;
};

int cmd_mc(const McArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const auto inst = read_instance_file(a.file);
  const std::uint64_t seed = a.seed.value_or(default_seed());
  const auto est = mc_expected_size(inst, a.samples, seed, a.workers);
  const std::size_t n = max_card_matching(inst.graph()).size();

  ExperimentRow row;
  row.instance_id = label_of(a.file);
  row.n = n;
  row.mode = "mc";
  row.expected_size = format_real(est.mean);
  row.seed = seed;
  if (n > 0) {
    const double ratio = est.mean / static_cast<double>(n);
    const double bound = competitive_bound(n);
    row.ratio = format_real(ratio);
    row.bound = format_real(bound);
    row.verdict = bound <= ratio ? "pass" : "fail";
  } else {
    row.verdict = "vacuous";
  }
  row.runtime_ms = elapsed_ms(start);

  if (a.csv.wanted()) a.csv.write({row});
  if (!a.csv.to_stdout) {
    std::cout << "mean " << format_real(est.mean) << '\n';
    std::cout << "sd " << format_real(est.sd) << '\n';
    std::cout << "stderr " << format_real(est.sd / std::sqrt(static_cast<double>(est.samples))) << '\n';
    std::cout << "samples " << est.samples << " seed " << est.seed << '\n';
  }
  return kPass;
}

// check ----------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  bool random = false;
  std::string suite;
  SuiteOptions opts;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_side;
  std::optional<double> edge_prob;
  CsvSink csv;
};

void print_rank_move(const RankMoveTally& t) {
  std::cout << "rank-move cases " << t.checked << ", skipped " << t.skipped << ", u unmatched " << t.u_unmatched
            << '\n';
  std::cout << "moved-order reading " << t.moved_order_holds << '/' << t.checked
            << (t.moved_order_survives() ? " (survives)" : " (refuted)") << '\n';
  std::cout << "original-order reading " << t.original_order_holds << '/' << t.checked
            << (t.original_order_survives() ? " (survives)" : " (refuted)") << '\n';
}

int cmd_check(CheckArgs& a) {
  if (a.random == !a.file.empty()) throw InvalidInput("check needs either an instance file or --random");
  const Suite s = parse_suite(a.suite);
  a.opts.seed = a.seed.value_or(default_seed());
  a.opts.max_side = a.max_side;
  a.opts.edge_prob = a.edge_prob;

  const SuiteReport r = a.random ? run_random_suite(s, a.opts)
                                 : run_suite(s, read_instance_file(a.file), a.opts, label_of(a.file));
  if (a.csv.wanted()) a.csv.write(r.rows);
  if (!a.csv.to_stdout) {
    std::cout << "suite " << suite_name(s) << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
    std::cout << "instances " << r.instances << ", trials " << r.trials;
    if (a.random) std::cout << ", seed " << a.opts.seed;
    std::cout << '\n';
    for (const auto& n : r.notes) std::cout << n << '\n';
    if (s == Suite::rank_move) print_rank_move(r.rank_move);
  }
  const std::size_t shown = 10;
  for (std::size_t k = 0; k < r.failures.size() && k < shown; ++k) {
    const auto& f = r.failures[k];
    std::cerr << "failure in instance " << f.instance << ": " << f.message << '\n';
    if (!f.replay.empty()) std::cerr << "--- replay ---\n" << f.replay << "--------------\n";
  }
  if (r.failures.size() > shown) std::cerr << (r.failures.size() - shown) << " more failures\n";
  return r.passed() ? kPass : kPropertyFailure;
}

// bound ----------------------------------------------------------------------

struct BoundArgs {
  std::uint64_t n = 1;
  bool exact = false;
  bool limit_gap = false;
};

constexpr std::uint64_t kMaxExactBound = 10000;

int cmd_bound(const BoundArgs& a) {
  if (a.exact) {
    if (a.n > kMaxExactBound) throw InvalidInput("--exact is limited to n <= " + std::to_string(kMaxExactBound));
    std::cout << to_string(competitive_bound_exact(a.n)) << '\n';
  } else if (!a.limit_gap) {
    std::cout << format_real(competitive_bound(a.n)) << '\n';
  }
  if (a.limit_gap) {
    std::cout << format_real(std::abs(competitive_bound(a.n) - (1 - std::exp(-1.0)))) << '\n';
  }
  return kPass;
}

// gamma ----------------------------------------------------------------------

int cmd_gamma(std::size_t n, unsigned workers) {
  const auto r = gamma_min_ratio(n, workers);
  const Rational bound = competitive_bound_exact(n);
  std::cout << "Q_" << n << " = " << to_string(r.min_ratio) << '\n';
  std::cout << "graphs " << r.graphs << ", instances " << r.instances << '\n';
  std::cout << "bound " << to_string(bound) << (r.min_ratio >= bound ? " holds" : " FAILS") << '\n';
  std::cout << "minimizer:\n" << serialize_instance(r.argmin);
  return r.min_ratio >= bound ? kPass : kPropertyFailure;
}

// gen ------------------------------------------------------------------------

struct GenArgs {
  std::size_t offline = 4;
  std::size_t online = 4;
  std::size_t n = 3;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string out_dir;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

int cmd_gen_random(const GenArgs& a) {
  const std::uint64_t seed = a.seed.value_or(default_seed());
  emit(a.out, serialize_instance(gen_random(a.offline, a.online, a.p, seed)));
  return kPass;
}

int cmd_gen_perfect(const GenArgs& a) {
  const std::uint64_t seed = a.seed.value_or(default_seed());
  const auto p = gen_perfect(a.n, a.p, seed);
  std::ostringstream os;
  os << "# planted";
  for (const auto& u : p.instance.pi()) os << ' ' << u << '-' << *p.planted.partner(u);
  os << '\n' << serialize_instance(p.instance);
  emit(a.out, os.str());
  return kPass;
}

int cmd_gen_gamma(const GenArgs& a) {
  if (a.out_dir.empty()) throw InvalidInput("gen gamma writes one file per instance and needs --out-dir");
  std::filesystem::create_directories(a.out_dir);
  const auto graphs = gamma_graphs(a.n);
  std::size_t files = 0;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const Permutation offline = gamma_offline(graphs[g]);
    const auto orders = gamma_arrival_orders(graphs[g]);
    for (std::size_t k = 0; k < orders.size(); ++k) {
      const BipartiteInstance inst(graphs[g], offline, orders[k]);
      const auto name = "gamma" + std::to_string(a.n) + "_g" + std::to_string(g) + "_a" + std::to_string(k) + ".obm";
      emit((std::filesystem::path(a.out_dir) / name).string(), serialize_instance(inst));
      ++files;
    }
  }
  std::cout << "wrote " << files << " instances from " << graphs.size() << " graphs to " << a.out_dir << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ranklab: exact and sampled checks of the RANKING online matching algorithm"};
  app.require_subcommand(1);
  std::string suite_list;
  for (auto name : suite_names()) suite_list += (suite_list.empty() ? "" : ", ") + std::string(name);

  std::string run_file;
  auto* run = app.add_subcommand("run", "Print the online matching for the file's orders");
  run->add_option("file", run_file, "Instance file")->required();

  ExactArgs exact;
  auto* ex = app.add_subcommand("exact", "Exact expected matching size over every ranking");
  ex->add_option("file", exact.file, "Instance file")->required();
  ex->add_option("--cap", exact.cap, "Largest offline party to enumerate")->capture_default_str();
  ex->add_option("--workers", exact.workers, "Worker threads")->check(CLI::Range(1U, 256U));
  add_csv_options(ex, exact.csv);

  McArgs mc;
  auto* m = app.add_subcommand("mc", "Monte Carlo estimate of the expected matching size");
  m->add_option("file", mc.file, "Instance file")->required();
  m->add_option("--samples", mc.samples, "Number of sampled rankings")->capture_default_str();
  m->add_option("--seed", mc.seed, "Seed (default: RANKLAB_SEED or 1)");
  m->add_option("--workers", mc.workers, "Worker threads")->check(CLI::Range(1U, 256U));
  add_csv_options(m, mc.csv);

  CheckArgs check;
  auto* ck = app.add_subcommand("check", "Run a property suite on a file or on random instances");
  ck->add_option("file", check.file, "Instance file");
  ck->add_flag("--random", check.random, "Generate random instances instead of reading a file");
  ck->add_option("--suite", check.suite, "One of: " + suite_list)->required();
  ck->add_option("--count", check.opts.count, "Random instances")->capture_default_str();
  ck->add_option("--seed", check.seed, "Seed (default: RANKLAB_SEED or 1)");
  ck->add_option("--max-side", check.max_side, "Largest party of a random instance");
  ck->add_option("--edge-prob", check.edge_prob, "Edge probability (default: drawn per instance)")
      ->check(CLI::Range(0.0, 1.0));
  ck->add_option("--cap", check.opts.cap, "Enumeration cap for exact suites")->capture_default_str();
  ck->add_option("--workers", check.opts.workers, "Worker threads")->check(CLI::Range(1U, 256U));
  add_csv_options(ck, check.csv);

  BoundArgs bound;
  auto* bd = app.add_subcommand("bound", "The competitive bound 1 - (n/(n+1))^n");
  bd->add_option("--n", bound.n, "n >= 1")->required();
  bd->add_flag("--exact", bound.exact, "Print the exact fraction");
  bd->add_flag("--limit-gap", bound.limit_gap, "Print |bound - (1 - 1/e)|");

  std::size_t gamma_n = 1;
  unsigned gamma_workers = 1;
  auto* gm = app.add_subcommand("gamma", "Exact minimum ratio over the family Gamma_n (n <= 2)");
  gm->add_option("--n", gamma_n, "n")->required();
  gm->add_option("--workers", gamma_workers, "Worker threads")->check(CLI::Range(1U, 256U));

  GenArgs gen;
  auto* gn = app.add_subcommand("gen", "Write instance files");
  gn->require_subcommand(1);
  auto* gr = gn->add_subcommand("random", "Random bipartite instance");
  gr->add_option("--offline", gen.offline, "Offline vertices")->capture_default_str();
  gr->add_option("--online", gen.online, "Online vertices")->capture_default_str();
  gr->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gr->add_option("--seed", gen.seed, "Seed (default: RANKLAB_SEED or 1)");
  gr->add_option("--out", gen.out, "Output file (default: stdout)");
  auto* gp = gn->add_subcommand("perfect", "Instance with a planted perfect matching");
  gp->add_option("--n", gen.n, "Vertices per party")->capture_default_str();
  gp->add_option("--p", gen.p, "Probability of each extra edge")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gp->add_option("--seed", gen.seed, "Seed (default: RANKLAB_SEED or 1)");
  gp->add_option("--out", gen.out, "Output file (default: stdout)");
  auto* gg = gn->add_subcommand("gamma", "Every instance of Gamma_n, one file each");
  gg->add_option("--n", gen.n, "n <= 2")->required();
  gg->add_option("--out-dir", gen.out_dir, "Directory for the files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*run) return cmd_run(run_file);
    if (*ex) return cmd_exact(exact);
    if (*m) return cmd_mc(mc);
    if (*ck) return cmd_check(check);
    if (*bd) return cmd_bound(bound);
    if (*gm) return cmd_gamma(gamma_n, gamma_workers);
    if (*gr) return cmd_gen_random(gen);
    if (*gp) return cmd_gen_perfect(gen);
    if (*gg) return cmd_gen_gamma(gen);
  } catch (const LemmaViolation& e) {
    std::cerr << "property failure: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
