// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every threshold below is fixed; nothing is tuned per run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphbandit/graphbandit.hpp"
#include "oracles.hpp"

namespace gb = graphbandit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int precision = 4) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gb::ExperimentConfig protocol(const std::string& name, std::uint64_t seed, gb::Round horizon) {
  gb::ExperimentConfig cfg;
  cfg.name = name;
  cfg.seed = seed;
  cfg.horizon = horizon;
  cfg.trials = 210;
  cfg.groups = 14;
  cfg.bayesian = true;
  return cfg;
}

std::vector<fs::path> regression_configs(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Runs a regression config the way the CLI would and writes its outputs.
void run_and_emit(const fs::path& config, const fs::path& out, std::size_t threads) {
  const auto cfg = gb::load_config(config);
  if (cfg.grid) {
    gb::ExperimentResult best;
    const auto report = gb::grid_search(cfg, {threads}, &best);
    gb::emit_results(best, out, {{"grid", gb::to_json(report)}});
  } else {
    gb::emit_results(gb::run_experiment(cfg, {threads}), out);
  }
}

class Suite {
 public:
  Suite(std::size_t threads, fs::path config_dir, fs::path scratch)
      : threads_(threads), config_dir_(std::move(config_dir)), scratch_(std::move(scratch)) {}

  // Bayesian TS-N mean regret <= sqrt(chi/2 * ln K * T), K = 10, T = 5000,
  // 210 trials, exact chi from the brute-force oracle.
  Outcome bound_compliance() {
    struct Case {
      std::string label;
      gb::GraphSpec graph;
      std::size_t expected_chi;
    };
    std::vector<Case> cases;
    {
      gb::GraphSpec g;
      g.type = "empty";
      g.n = 10;
      cases.push_back({"edgeless", g, 10});
      g.type = "complete";
      cases.push_back({"complete", g, 1});
      for (const std::size_t k : {2, 5}) {
        gb::GraphSpec pp;
        pp.type = "planted_partition";
        pp.n = 10;
        pp.k = k;
        pp.p = 1.0;
        pp.q = 0.0;
        cases.push_back({"partition k=" + std::to_string(k), pp, k});
      }
    }
    Outcome out{true, ""};
    for (const auto& c : cases) {
      auto cfg = protocol("bound", 11, 5000);
      cfg.graph = c.graph;
      cfg.policies = {{"ts-n", {}}};
      const auto result = gb::run_experiment(cfg, {threads_});
      const auto& b = result.bound;
      const bool exact_ok = b.used_exact && b.chi_bar() == c.expected_chi;
      const bool ok = exact_ok && b.within_bound().value_or(false);
      out.pass = out.pass && ok;
      out.detail += c.label + ": " + fmt(*b.observed_mean_regret) + " <= " + fmt(b.bound) + " (chi " +
                    std::to_string(b.chi_bar()) + (exact_ok ? "" : ", WRONG chi") + "); ";
    }
    // Every shipped Bayesian regression config that runs TS-N must also sit under its bound.
    std::size_t checked = 0;
    for (const auto& path : regression_configs(config_dir_)) {
      const auto cfg = gb::load_config(path);
      if (cfg.grid || !cfg.bayesian) continue;
      const bool has_tsn = std::any_of(cfg.policies.begin(), cfg.policies.end(),
                                       [](const gb::PolicySpec& p) { return p.name == "ts-n"; });
      if (!has_tsn) continue;
      const auto b = gb::run_experiment(cfg, {threads_}).bound;
      ++checked;
      if (!b.within_bound().value_or(false)) {
        out.pass = false;
        out.detail += path.filename().string() + " OVER: " + fmt(*b.observed_mean_regret) + " > " + fmt(b.bound) + "; ";
      }
    }
    out.detail += std::to_string(checked) + " shipped configs checked";
    return out;
  }

  // TS-N on the edgeless graph equals textbook Thompson sampling arm for
  // arm; on the complete graph every arm has t observations after round t.
  Outcome reduction_oracles() {
    const std::size_t k = 10;
    const gb::Round horizon = 1000;
    std::size_t mismatches = 0, trials = 0;
    const gb::GraphSequence edgeless(gb::empty_graph(k));
    for (std::uint64_t seed = 0; seed < 20; ++seed, ++trials) {
      gb::Engine inst(gb::derive_seed(seed, 1));
      const auto bandit = gb::sample_instance(k, inst);
      const gb::Environment env(bandit, edgeless, gb::RewardStream(gb::derive_seed(seed, 2)));
      gb::ThompsonPolicy policy(k, false);
      oracle::TextbookThompson textbook(k);
      gb::Engine r1(gb::derive_seed(seed, 3)), r2(gb::derive_seed(seed, 3));
      for (gb::Round t = 1; t <= horizon; ++t) {
        const gb::Arm a = policy.select({t, env.probe(t)}, r1);
        const auto b = textbook.select(r2);
        if (a != b) {
          ++mismatches;
          break;
        }
        const auto obs = env.step(t, a);
        policy.ingest(obs, r1);
        textbook.update(b, obs.reward);
      }
    }
    std::size_t count_errors = 0;
    const gb::GraphSequence complete(gb::complete_graph(k));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      gb::Engine rng(gb::derive_seed(seed, 4));
      const auto bandit = gb::sample_instance(k, rng);
      const gb::Environment env(bandit, complete, gb::RewardStream(gb::derive_seed(seed, 5)));
      gb::ThompsonPolicy policy(k, false);
      gb::Observation obs;
      for (gb::Round t = 1; t <= horizon; ++t) {
        env.step(t, policy.select({t, env.probe(t)}, rng), obs);
        policy.ingest(obs, rng);
        for (gb::Arm i = 0; i < k; ++i) count_errors += policy.posterior().observations(i) != t;
      }
    }
    return {mismatches == 0 && count_errors == 0,
            "edgeless: " + std::to_string(trials - mismatches) + "/" + std::to_string(trials) +
                " trials identical over T=1000; complete: " + std::to_string(count_errors) +
                " count mismatches over 20 x 1000 rounds"};
  }

  // n = 64, p = 1, q = 0.02, k in {2,4,8,16}, T = 20000, N = 210, a0 = 14:
  // TS-N median-of-means final regret nondecreasing in k.
  Outcome partition_scaling() {
    auto cfg = protocol("partition_scaling", 2024, 20000);
    cfg.graph.type = "planted_partition";
    cfg.graph.n = 64;
    cfg.graph.k = 2;
    cfg.graph.p = 1.0;
    cfg.graph.q = 0.02;
    cfg.policies = {{"ts-n", {}}};
    const auto sweep = gb::planted_partition_sweep(cfg, {2, 4, 8, 16}, {threads_});
    bool monotone = true;
    std::string detail;
    for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
      if (i > 0 && sweep.rows[i].final_regret < sweep.rows[i - 1].final_regret) monotone = false;
      detail += "k=" + std::to_string(sweep.rows[i].k) + ": " + fmt(sweep.rows[i].final_regret) + "  ";
    }
    return {monotone, detail};
  }

  // G(100, 200) versus G(100, 2000) with matched seeds, T = 20000.
  Outcome density_ordering() {
    const auto& sparse = sparse_er();
    auto cfg = er_config(2000);
    cfg.policies = {{"ts-n", {}}};
    const auto dense = gb::run_experiment(cfg, {threads_});
    const double s = sparse.policy("ts-n").final_center();
    const double d = dense.policy("ts-n").final_center();
    return {d < s, "TS-N final regret dense " + fmt(d) + " < sparse " + fmt(s)};
  }

  // Sparse G(100, 200): TS-N beats UCB-N under common random numbers.
  Outcome directional() {
    const auto& sparse = sparse_er();
    const double ts = sparse.policy("ts-n").final_center();
    const double ucb = sparse.policy("ucb-n").final_center();
    return {ts < ucb, "TS-N " + fmt(ts) + " < UCB-N " + fmt(ucb)};
  }

  // median_of_means(a0 = 1) = mean, (a0 = N) = median; GMD equals the
  // pairwise oracle on 100 samples of sizes 2..500. Tolerance 1e-12,
  // samples on the unit interval.
  Outcome statistics_oracles() {
    gb::Engine rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_mean = 0, worst_median = 0, worst_gmd = 0;
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t n = 2 + rng() % 499;
      std::vector<double> x(n);
      for (auto& v : x) v = unit(rng);
      worst_mean = std::max(worst_mean, std::abs(gb::median_of_means(x, 1, rng) - oracle::mean(x)));
      worst_median = std::max(worst_median, std::abs(gb::median_of_means(x, n, rng) - oracle::sorted_median(x)));
      worst_gmd = std::max(worst_gmd, std::abs(gb::gini_mean_difference(x) - oracle::mean_pairwise_difference(x)));
    }
    const double tol = 1e-12;
    return {worst_mean <= tol && worst_median <= tol && worst_gmd <= tol,
            "max |error|: mean " + fmt(worst_mean, 3) + ", median " + fmt(worst_median, 3) + ", GMD " +
                fmt(worst_gmd, 3) + " (tol 1e-12)"};
  }

  // Greedy cover and dominating set valid and within their guarantees of
  // the exact values on 250 random graphs with n <= 12; exact cover of a
  // p = 1, q = 0 planted partition equals k.
  Outcome graph_algorithm_oracles() {
    gb::Engine rng(314);
    std::size_t invalid = 0, cover_out = 0, dom_out = 0;
    const int graphs = 250;
    for (int rep = 0; rep < graphs; ++rep) {
      const std::size_t n = 1 + rng() % 12;
      const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const auto g = oracle::coin_flip_graph(n, p, rng);
      const auto cover = gb::greedy_clique_cover(g);
      const auto dom = gb::greedy_dominating_set(g);
      invalid += !gb::is_clique_cover(g, cover) + !gb::is_dominating_set(g, dom);
      std::size_t min_deg = n;
      for (gb::Vertex v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
      const auto chi = gb::exact_clique_cover_number(g);
      // Greedy colouring of the complement: chi <= |cover| <= Delta(complement) + 1.
      cover_out += cover.size() < chi || cover.size() > n - min_deg;
      const auto gamma = gb::exact_domination_number(g);
      dom_out += dom.size() < gamma ||
                 static_cast<double>(dom.size()) > static_cast<double>(gamma) * gb::harmonic_number(g.max_degree() + 1);
    }
    std::size_t partition_errors = 0, partitions = 0;
    for (std::size_t n = 2; n <= 12; ++n) {
      for (std::size_t k = 1; k <= n; ++k, ++partitions) {
        const auto pp = gb::gen_planted_partition(n, k, 1.0, 0.0, rng);
        partition_errors += gb::exact_clique_cover_number(pp.graph) != k;
      }
    }
    return {invalid == 0 && cover_out == 0 && dom_out == 0 && partition_errors == 0,
            std::to_string(graphs) + " graphs: " + std::to_string(invalid) + " invalid, " + std::to_string(cover_out) +
                " cover and " + std::to_string(dom_out) + " domination outside guarantee; " +
                std::to_string(partitions - partition_errors) + "/" + std::to_string(partitions) +
                " partitions with exact cover k"};
  }

  // Every shipped regression config, run twice (different thread counts),
  // writes byte-identical summary.csv and meta.json.
  Outcome determinism() {
    std::size_t identical = 0, total = 0;
    std::string differing;
    for (const auto& path : regression_configs(config_dir_)) {
      const auto stem = path.stem().string();
      const auto a = scratch_ / "determinism" / (stem + "_a");
      const auto b = scratch_ / "determinism" / (stem + "_b");
      fs::remove_all(a);
      fs::remove_all(b);
      run_and_emit(path, a, 1);
      run_and_emit(path, b, 2);
      ++total;
      const bool same = slurp(a / "summary.csv") == slurp(b / "summary.csv") &&
                        slurp(a / "meta.json") == slurp(b / "meta.json") && !slurp(a / "summary.csv").empty();
      if (same) {
        ++identical;
      } else {
        differing += " " + stem;
      }
    }
    return {total > 0 && identical == total, std::to_string(identical) + "/" + std::to_string(total) +
                                                 " regression configs byte-identical" +
                                                 (differing.empty() ? "" : "; differ:" + differing)};
  }

 private:
  gb::ExperimentConfig er_config(std::uint64_t m) const {
    auto cfg = protocol("density", 77, 20000);
    cfg.graph.type = "erdos_renyi";
    cfg.graph.n = 100;
    cfg.graph.m = m;
    return cfg;
  }

  const gb::ExperimentResult& sparse_er() {
    if (!sparse_) {
      auto cfg = er_config(200);
      cfg.policies = {{"ts-n", {}}, {"ucb-n", {}}};
      sparse_ = gb::run_experiment(cfg, {threads_});
    }
    return *sparse_;
  }

  std::size_t threads_;
  fs::path config_dir_;
  fs::path scratch_;
  std::optional<gb::ExperimentResult> sparse_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::size_t threads = 0;
  std::string config_dir = GRAPHBANDIT_SOURCE_DIR "/configs/regression";
  std::string scratch = (fs::temp_directory_path() / "graphbandit_acceptance").string();
  std::string only;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  app.add_option("--configs", config_dir, "Directory of regression configs");
  app.add_option("--scratch", scratch, "Scratch directory for output files");
  app.add_option("--only", only, "Run only criteria whose name contains this string");
  CLI11_PARSE(app, argc, argv);

  Suite suite(threads, config_dir, scratch);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bound-compliance", [&] { return suite.bound_compliance(); }},
      {"reduction-oracles", [&] { return suite.reduction_oracles(); }},
      {"partition-scaling", [&] { return suite.partition_scaling(); }},
      {"density-ordering", [&] { return suite.density_ordering(); }},
      {"ts-beats-ucb", [&] { return suite.directional(); }},
      {"statistics-oracles", [&] { return suite.statistics_oracles(); }},
      {"graph-algorithm-oracles", [&] { return suite.graph_algorithm_oracles(); }},
      {"determinism", [&] { return suite.determinism(); }},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    if (!only.empty() && name.find(only) == std::string::npos) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << " [" << fmt(secs, 3) << "s] " << outcome.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
