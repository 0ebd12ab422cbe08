// Command-line front end: run experiments, partition sweeps, grid searches
// and graph statistics.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphbandit/graphbandit.hpp"

namespace gb = graphbandit;

namespace {

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> trials;
  std::optional<gb::Round> horizon;
  bool verbose_curves = false;
  std::size_t threads = 0;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--seed", o.seed, "Master seed");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--trials", o.trials, "Number of independent trials");
  cmd->add_option("--horizon", o.horizon, "Rounds per trial");
  cmd->add_flag("--verbose-curves", o.verbose_curves, "Also write per-trial curves.csv");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

gb::ExperimentConfig load_with_overrides(const std::string& path, const Overrides& o) {
  auto cfg = gb::load_config(path);
  if (o.seed) cfg.seed = *o.seed;
  if (o.out) cfg.output = *o.out;
  if (o.trials) cfg.trials = *o.trials;
  if (o.horizon) cfg.horizon = *o.horizon;
  if (o.verbose_curves) cfg.verbose_curves = true;
  cfg.validate();
  return cfg;
}

void print_policy_finals(const gb::ExperimentResult& result) {
  for (const auto& p : result.policies) {
    std::cout << "  " << p.spec.label() << ": final regret " << p.final_center() << " (-" << p.summary.dev_lower.back()
              << " / +" << p.summary.dev_upper.back() << ")\n";
  }
}

int cmd_run(const std::string& config_path, const Overrides& o) {
  const auto cfg = load_with_overrides(config_path, o);
  const auto result = gb::run_experiment(cfg, {o.threads});
  gb::emit_results(result, cfg.output);
  std::cout << "wrote " << cfg.output << "\n";
  print_policy_finals(result);
  const auto& b = result.bound;
  std::cout << "  bound sqrt(chi/2 * ln K * T) = " << b.bound << " (chi " << b.chi_bar() << ", "
            << (b.used_exact ? "exact" : "greedy") << ")\n";
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::size_t>& ks_flag, const Overrides& o) {
  const auto cfg = load_with_overrides(config_path, o);
  const auto ks = ks_flag.empty() ? cfg.sweep_k : ks_flag;
  if (ks.empty()) throw gb::ConfigError("no k-values: pass --k or set 'sweep_k' in the config");
  const auto sweep = gb::planted_partition_sweep(cfg, ks, {o.threads}, cfg.output);
  std::cout << "wrote " << cfg.output << "/sweep.csv\n";
  for (const auto& row : sweep.rows) {
    std::cout << "  k=" << row.k << " " << row.policy << ": " << row.final_regret << " (relative "
              << row.relative_regret << ")\n";
  }
  return 0;
}

int cmd_grid(const std::string& config_path, const Overrides& o) {
  const auto cfg = load_with_overrides(config_path, o);
  gb::ExperimentResult best;
  const auto report = gb::grid_search(cfg, {o.threads}, &best);
  gb::emit_results(best, cfg.output, {{"grid", gb::to_json(report)}});
  gb::write_grid_table(report, std::filesystem::path(cfg.output) / "grid.csv");
  std::cout << "wrote " << cfg.output << "\n  best " << report.policy << " " << gb::Json(report.best_point().params).dump()
            << " -> " << report.best_point().score << "\n";
  return 0;
}

int cmd_graph_stats(const std::string& edge_list, bool remap) {
  const auto loaded = gb::load_edge_list(edge_list, remap);
  auto j = gb::to_json(gb::compute_graph_stats(loaded.graph));
  j["self_loops_dropped"] = loaded.self_loops_dropped;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bandit simulations with graph-structured feedback"};
  app.require_subcommand(1);

  Overrides run_o, sweep_o, grid_o;
  std::string run_cfg, sweep_cfg, grid_cfg, edge_list;
  std::vector<std::size_t> ks;
  bool remap = false;

  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", run_cfg, "Config file (JSON)")->required();
  add_overrides(run, run_o);

  auto* sweep = app.add_subcommand("sweep-partition", "Planted-partition sweep over the number of groups");
  sweep->add_option("config", sweep_cfg, "Config file with a planted_partition graph")->required();
  sweep->add_option("--k", ks, "Comma-separated group counts (must include 2)")->delimiter(',');
  add_overrides(sweep, sweep_o);

  auto* grid = app.add_subcommand("grid-search", "Grid search over a policy's hyperparameters");
  grid->add_option("config", grid_cfg, "Config file with a 'grid' section")->required();
  add_overrides(grid, grid_o);

  auto* stats = app.add_subcommand("graph-stats", "Print size, degree, cover and domination numbers as JSON");
  stats->add_option("edge-list", edge_list, "Edge-list file")->required();
  stats->add_flag("--remap", remap, "Compact sparse vertex ids to 0..n-1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_cfg, run_o);
    if (*sweep) return cmd_sweep(sweep_cfg, ks, sweep_o);
    if (*grid) return cmd_grid(grid_cfg, grid_o);
    if (*stats) return cmd_graph_stats(edge_list, remap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
