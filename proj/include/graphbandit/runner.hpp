#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "graphbandit/config.hpp"
#include "graphbandit/env.hpp"
#include "graphbandit/errors.hpp"
#include "graphbandit/generators.hpp"
#include "graphbandit/graph.hpp"
#include "graphbandit/graphalgo.hpp"
#include "graphbandit/io.hpp"
#include "graphbandit/policies.hpp"
#include "graphbandit/rng.hpp"
#include "graphbandit/stats.hpp"

namespace graphbandit {

inline constexpr const char* kSoftwareName = "graphbandit";
inline constexpr const char* kSoftwareVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Graphs

struct GraphBundle {
  GraphSequence sequence{Graph()};
  std::vector<std::uint32_t> labels;          // planted partition only
  std::vector<std::uint64_t> external_ids;    // remapped edge lists only
  std::size_t self_loops_dropped = 0;
};

namespace detail {

inline GraphBundle build_single(const GraphSpec& spec, std::uint64_t seed) {
  Engine rng(seed);
  GraphBundle out;
  if (spec.type == "empty") {
    out.sequence = GraphSequence(empty_graph(spec.n));
  } else if (spec.type == "complete") {
    out.sequence = GraphSequence(complete_graph(spec.n));
  } else if (spec.type == "erdos_renyi") {
    out.sequence = GraphSequence(spec.m ? gen_erdos_renyi(spec.n, *spec.m, rng) : gen_erdos_renyi_p(spec.n, *spec.p, rng));
  } else if (spec.type == "power_law") {
    out.sequence = GraphSequence(gen_power_law(spec.n, spec.m.value_or(0), spec.exponent, rng));
  } else if (spec.type == "planted_partition") {
    auto pp = gen_planted_partition(spec.n, spec.k, spec.p.value_or(1.0), spec.q, rng);
    out.sequence = GraphSequence(std::move(pp.graph));
    out.labels = std::move(pp.labels);
  } else if (spec.type == "edge_list") {
    auto loaded = load_edge_list(spec.path, spec.remap);
    out.sequence = GraphSequence(std::move(loaded.graph));
    out.external_ids = std::move(loaded.external_ids);
    out.self_loops_dropped = loaded.self_loops_dropped;
  } else {
    throw ConfigError("cannot build graph of type '" + spec.type + "'");
  }
  return out;
}

}  // namespace detail

/// Materialises the configured graph(s). Random graphs are drawn once per
/// experiment from the master seed; schedule entry i uses its own substream.
inline GraphBundle build_graphs(const GraphSpec& spec, std::uint64_t master_seed) {
  if (spec.type != "schedule") return detail::build_single(spec, derive_seed(master_seed, stream::kGraph, 0));
  std::vector<Graph> graphs;
  GraphBundle out;
  for (std::size_t i = 0; i < spec.schedule.size(); ++i) {
    auto part = detail::build_single(spec.schedule[i], derive_seed(master_seed, stream::kGraph, i));
    if (i == 0) {
      out.labels = std::move(part.labels);
      out.external_ids = std::move(part.external_ids);
    }
    out.self_loops_dropped += part.self_loops_dropped;
    graphs.push_back(part.sequence.graphs().front());
  }
  out.sequence = GraphSequence(std::move(graphs), spec.dwell);
  return out;
}

struct GraphStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::size_t clique_cover_greedy = 0;
  std::optional<std::size_t> clique_cover_exact;
  std::size_t dominating_set_greedy = 0;
  std::optional<std::size_t> domination_exact;
};

inline GraphStats compute_graph_stats(const Graph& g) {
  GraphStats s;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.max_degree = g.max_degree();
  s.clique_cover_greedy = greedy_clique_cover(g).size();
  s.dominating_set_greedy = greedy_dominating_set(g).size();
  if (s.vertices <= kExactCliqueCoverLimit) s.clique_cover_exact = exact_clique_cover_number(g);
  if (s.vertices <= kExactDominationLimit) s.domination_exact = exact_domination_number(g);
  return s;
}

inline Json to_json(const GraphStats& s) {
  Json j;
  j["n"] = s.vertices;
  j["edges"] = s.edges;
  j["max_degree"] = s.max_degree;
  j["clique_cover_greedy"] = s.clique_cover_greedy;
  j["clique_cover_exact"] = s.clique_cover_exact ? Json(*s.clique_cover_exact) : Json(nullptr);
  j["dominating_set_greedy"] = s.dominating_set_greedy;
  j["domination_exact"] = s.domination_exact ? Json(*s.domination_exact) : Json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// Trials

/// Rounds at which cumulative regret is recorded: every `stride`-th round,
/// plus the horizon. A zero stride means one record per horizon/2000 rounds.
inline std::vector<Round> checkpoint_rounds(Round horizon, Round stride) {
  if (stride == 0) stride = std::max<Round>(1, horizon / 2000);
  std::vector<Round> rounds;
  for (Round t = stride; t <= horizon; t += stride) rounds.push_back(t);
  if (rounds.empty() || rounds.back() != horizon) rounds.push_back(horizon);
  return rounds;
}

/// Problem instance of a trial: resampled per trial in Bayesian mode,
/// otherwise one instance shared by all trials.
inline BernoulliBandit trial_instance(const ExperimentConfig& cfg, std::size_t arms, std::size_t trial) {
  Engine rng(cfg.bayesian ? derive_seed(cfg.seed, stream::kInstance, trial)
                          : derive_seed(cfg.seed, stream::kFixedInstance));
  return sample_instance(arms, rng);
}

/// Reward stream of a trial, shared by every policy in that trial.
inline RewardStream trial_rewards(const ExperimentConfig& cfg, std::size_t trial) {
  return RewardStream(derive_seed(cfg.seed, stream::kRewards, trial));
}

/// Policy-private randomness, keyed by label so that adding or reordering
/// policies never changes another policy's stream.
inline Engine trial_policy_engine(const ExperimentConfig& cfg, std::size_t trial, const PolicySpec& spec) {
  return Engine(derive_seed(cfg.seed, stream::kPolicy, trial, fnv1a(spec.label())));
}

/// Runs one policy for `horizon` rounds and returns cumulative
/// pseudo-regret at each checkpoint.
inline std::vector<double> simulate(Policy& policy, const Environment& env, std::span<const Round> checkpoints,
                                    Engine& rng) {
  std::vector<double> curve;
  curve.reserve(checkpoints.size());
  if (checkpoints.empty()) return curve;
  const Round horizon = checkpoints.back();
  Observation obs;
  obs.observed.reserve(env.arm_count());
  double cumulative = 0.0;
  std::size_t next = 0;
  for (Round t = 1; t <= horizon; ++t) {
    const RoundContext ctx{t, env.probe(t)};
    const Arm a = policy.select(ctx, rng);
    env.step(t, a, obs);
    policy.ingest(obs, rng);
    cumulative += env.pseudo_regret(a);
    if (t == checkpoints[next]) {
      curve.push_back(cumulative);
      ++next;
    }
  }
  return curve;
}

struct RunOptions {
  std::size_t threads = 0;  // 0 = hardware concurrency
};

struct PolicyResult {
  PolicySpec spec;
  std::vector<std::vector<double>> curves;  // [trial][checkpoint]
  SummaryCurve summary;
  double mean_final_regret = 0.0;

  double final_center() const { return summary.center.back(); }
};

struct BoundReport {
  std::size_t arms = 0;
  Round horizon = 0;
  std::size_t chi_bar_upper = 0;
  std::optional<std::size_t> chi_bar_exact;
  bool used_exact = false;
  bool time_varying = false;
  bool bayesian = true;
  double entropy = 0.0;
  double bound = 0.0;
  std::string observed_policy;
  std::optional<double> observed_mean_regret;

  std::size_t chi_bar() const { return used_exact ? *chi_bar_exact : chi_bar_upper; }
  std::optional<bool> within_bound() const {
    if (!observed_mean_regret) return std::nullopt;
    return *observed_mean_regret <= bound;
  }
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<Round> rounds;
  std::vector<PolicyResult> policies;
  std::vector<GraphStats> graph_stats;  // one per distinct graph in the sequence
  BoundReport bound;
  GraphBundle graphs;

  const PolicyResult& policy(const std::string& label) const {
    for (const auto& p : policies) {
      if (p.spec.label() == label) return p;
    }
    throw ArgumentError("no results for policy '" + label + "'");
  }
};

/// sqrt(chi * H * T / 2), the Thompson-sampling Bayesian regret bound for a
/// graph with clique cover number chi and optimal-arm entropy H.
inline double ts_regret_bound(std::size_t chi_bar, double entropy, Round horizon) {
  return std::sqrt(0.5 * static_cast<double>(chi_bar) * entropy * static_cast<double>(horizon));
}

/// Bound versus observed regret. Optimal-arm entropy is ln K (the prior is
/// symmetric in the arms, so the optimal arm is uniform); over a schedule
/// the worst clique cover number is used.
inline BoundReport bound_report(const ExperimentConfig& cfg, const GraphSequence& graphs,
                                std::span<const GraphStats> stats, std::span<const PolicyResult> results) {
  BoundReport r;
  r.arms = graphs.vertex_count();
  r.horizon = cfg.horizon;
  r.time_varying = !graphs.is_static();
  r.bayesian = cfg.bayesian;
  bool all_exact = !stats.empty();
  std::size_t exact_max = 0;
  for (const auto& s : stats) {
    r.chi_bar_upper = std::max(r.chi_bar_upper, s.clique_cover_greedy);
    if (s.clique_cover_exact) {
      exact_max = std::max(exact_max, *s.clique_cover_exact);
    } else {
      all_exact = false;
    }
  }
  if (all_exact) {
    r.chi_bar_exact = exact_max;
    r.used_exact = true;
  }
  r.entropy = r.arms > 0 ? std::log(static_cast<double>(r.arms)) : 0.0;
  r.bound = ts_regret_bound(r.chi_bar(), r.entropy, r.horizon);
  for (const auto& p : results) {
    if (p.spec.name == "ts-n") {
      r.observed_policy = p.spec.label();
      r.observed_mean_regret = p.mean_final_regret;
      break;
    }
  }
  return r;
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["arms"] = r.arms;
  j["horizon"] = r.horizon;
  j["chi_bar_upper"] = r.chi_bar_upper;
  j["chi_bar_exact"] = r.chi_bar_exact ? Json(*r.chi_bar_exact) : Json(nullptr);
  j["chi_bar_source"] = r.used_exact ? "exact" : "greedy";
  j["time_varying"] = r.time_varying;
  j["bayesian"] = r.bayesian;
  j["entropy"] = r.entropy;
  j["bound"] = r.bound;
  j["observed_policy"] = r.observed_policy;
  j["observed_mean_regret"] = r.observed_mean_regret ? Json(*r.observed_mean_regret) : Json(nullptr);
  const auto within = r.within_bound();
  j["within_bound"] = within ? Json(*within) : Json(nullptr);
  return j;
}

/// Runs every configured policy on every trial and summarises.
///
/// Trials are spread over a worker pool; every random quantity is derived
/// from (seed, trial, ...) so results do not depend on scheduling.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {}) {
  cfg.validate();
  if (cfg.policies.empty()) throw ConfigError("no policies configured");
  ExperimentResult result;
  result.config = cfg;
  result.graphs = build_graphs(cfg.graph, cfg.seed);
  const GraphSequence& graphs = result.graphs.sequence;
  const std::size_t arms = graphs.vertex_count();
  if (arms < 2) throw ConfigError("experiments need at least 2 arms");
  for (const auto& g : graphs.graphs()) result.graph_stats.push_back(compute_graph_stats(g));

  // eps-greedy-d explores a dominating set of the first graph in the sequence.
  const DominatingSet dominating = greedy_dominating_set(graphs.graphs().front());
  result.rounds = checkpoint_rounds(cfg.horizon, cfg.record_every);

  const std::size_t policy_count = cfg.policies.size();
  result.policies.resize(policy_count);
  for (std::size_t p = 0; p < policy_count; ++p) {
    result.policies[p].spec = cfg.policies[p];
    result.policies[p].curves.resize(cfg.trials);
  }

  auto run_trial = [&](std::size_t trial) {
    const BernoulliBandit instance = trial_instance(cfg, arms, trial);
    const Environment env(instance, graphs, trial_rewards(cfg, trial));
    for (std::size_t p = 0; p < policy_count; ++p) {
      const auto& spec = cfg.policies[p];
      auto policy = make_policy(spec, arms, dominating);
      Engine rng = trial_policy_engine(cfg, trial, spec);
      result.policies[p].curves[trial] = simulate(*policy, env, result.rounds, rng);
    }
  };

  std::size_t workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, cfg.trials);
  if (workers <= 1) {
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) run_trial(trial);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t trial = next++; trial < cfg.trials; trial = next++) {
          try {
            run_trial(trial);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = cfg.trials;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  Engine group_rng(derive_seed(cfg.seed, stream::kGroups));
  const auto group_of = random_equipartition(cfg.trials, cfg.groups, group_rng);
  for (auto& pr : result.policies) {
    pr.summary = summarize(pr.curves, group_of, cfg.groups);
    double total = 0.0;
    for (const auto& c : pr.curves) total += c.back();
    pr.mean_final_regret = total / static_cast<double>(cfg.trials);
  }
  result.bound = bound_report(cfg, graphs, result.graph_stats, result.policies);
  return result;
}

// ---------------------------------------------------------------------------
// Output

namespace detail {

inline std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

/// RFC 4180 field: quoted when it holds a comma, quote or line break.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

inline void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace detail

inline Json meta_json(const ExperimentResult& result) {
  Json j;
  j["software"] = {{"name", kSoftwareName}, {"version", kSoftwareVersion}};
  j["config"] = to_json(result.config);
  j["seed"] = result.config.seed;
  j["trials"] = result.config.trials;
  j["groups"] = result.config.groups;
  j["rounds_recorded"] = result.rounds.size();
  j["graph"] = Json::array();
  for (const auto& s : result.graph_stats) j["graph"].push_back(to_json(s));
  j["self_loops_dropped"] = result.graphs.self_loops_dropped;
  j["bound"] = to_json(result.bound);
  j["policies"] = Json::array();
  for (const auto& p : result.policies) {
    j["policies"].push_back({{"label", p.spec.label()},
                             {"name", p.spec.name},
                             {"final_center", p.summary.center.back()},
                             {"final_dev_lower", p.summary.dev_lower.back()},
                             {"final_dev_upper", p.summary.dev_upper.back()},
                             {"final_dev_lower_raw", p.summary.dev_lower_raw.back()},
                             {"final_dev_upper_raw", p.summary.dev_upper_raw.back()},
                             {"mean_final_regret", p.mean_final_regret}});
  }
  return j;
}

/// Writes summary.csv and meta.json (plus curves.csv when verbose curves
/// are requested and vertex_ids.csv for remapped edge lists) into `dir`.
/// `extra_meta` members are merged into meta.json.
inline void emit_results(const ExperimentResult& result, const std::filesystem::path& dir,
                         const Json& extra_meta = Json::object()) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  {
    const auto path = dir / "summary.csv";
    auto out = detail::open_output(path);
    out << "round,policy,center,dev_lower,dev_upper,dev_lower_raw,dev_upper_raw\n";
    for (const auto& p : result.policies) {
      const auto label = detail::csv_field(p.spec.label());
      for (std::size_t i = 0; i < result.rounds.size(); ++i) {
        out << result.rounds[i] << ',' << label << ',' << detail::format_number(p.summary.center[i]) << ','
            << detail::format_number(p.summary.dev_lower[i]) << ',' << detail::format_number(p.summary.dev_upper[i])
            << ',' << detail::format_number(p.summary.dev_lower_raw[i]) << ','
            << detail::format_number(p.summary.dev_upper_raw[i]) << '\n';
      }
    }
    detail::finish_output(out, path);
  }
  {
    const auto path = dir / "meta.json";
    auto out = detail::open_output(path);
    Json meta = meta_json(result);
    for (const auto& [key, value] : extra_meta.items()) meta[key] = value;
    out << meta.dump(2) << '\n';
    detail::finish_output(out, path);
  }
  if (result.config.verbose_curves) {
    const auto path = dir / "curves.csv";
    auto out = detail::open_output(path);
    out << "trial,policy,round,regret\n";
    for (const auto& p : result.policies) {
      const auto label = detail::csv_field(p.spec.label());
      for (std::size_t trial = 0; trial < p.curves.size(); ++trial) {
        for (std::size_t i = 0; i < result.rounds.size(); ++i) {
          out << trial << ',' << label << ',' << result.rounds[i] << ','
              << detail::format_number(p.curves[trial][i]) << '\n';
        }
      }
    }
    detail::finish_output(out, path);
  }
  if (!result.graphs.external_ids.empty()) {
    const auto path = dir / "vertex_ids.csv";
    auto out = detail::open_output(path);
    out << "vertex,external_id\n";
    for (std::size_t v = 0; v < result.graphs.external_ids.size(); ++v) {
      out << v << ',' << result.graphs.external_ids[v] << '\n';
    }
    detail::finish_output(out, path);
  }
}

// ---------------------------------------------------------------------------
// Planted-partition sweep

struct SweepRow {
  std::size_t k = 0;
  std::string policy;
  double final_regret = 0.0;
  double relative_regret = 0.0;
};

struct SweepResult {
  std::vector<std::size_t> ks;
  std::vector<SweepRow> rows;
  double baseline = 0.0;  // best final regret at k = 2
};

/// Runs the template config once per k (same seed each time) and reports
/// each policy's final median-of-means regret relative to the best policy
/// at k = 2. When `out_dir` is non-empty each run is written to
/// out_dir/k<k>/ and the table to out_dir/sweep.csv.
inline SweepResult planted_partition_sweep(const ExperimentConfig& base, const std::vector<std::size_t>& ks,
                                           const RunOptions& options = {},
                                           const std::filesystem::path& out_dir = {}) {
  if (base.graph.type != "planted_partition") throw ConfigError("sweep needs a planted_partition graph");
  if (std::find(ks.begin(), ks.end(), std::size_t{2}) == ks.end()) throw ConfigError("sweep k-values must include 2");
  SweepResult sweep;
  sweep.ks = ks;
  std::map<std::size_t, std::vector<std::pair<std::string, double>>> finals;
  for (const auto k : ks) {
    ExperimentConfig cfg = base;
    cfg.graph.k = k;
    cfg.sweep_k.clear();
    if (!out_dir.empty()) cfg.output = (out_dir / ("k" + std::to_string(k))).string();
    const auto result = run_experiment(cfg, options);
    for (const auto& p : result.policies) finals[k].emplace_back(p.spec.label(), p.final_center());
    if (!out_dir.empty()) emit_results(result, cfg.output);
  }
  sweep.baseline = std::numeric_limits<double>::infinity();
  for (const auto& [label, value] : finals.at(2)) sweep.baseline = std::min(sweep.baseline, value);
  for (const auto k : ks) {
    for (const auto& [label, value] : finals.at(k)) {
      sweep.rows.push_back({k, label, value, value / sweep.baseline});
    }
  }
  if (!out_dir.empty()) {
    const auto path = out_dir / "sweep.csv";
    auto out = detail::open_output(path);
    out << "k,policy,final_regret,relative_regret\n";
    for (const auto& row : sweep.rows) {
      out << row.k << ',' << detail::csv_field(row.policy) << ',' << detail::format_number(row.final_regret) << ','
          << detail::format_number(row.relative_regret) << '\n';
    }
    detail::finish_output(out, path);
  }
  return sweep;
}

// ---------------------------------------------------------------------------
// Grid search

struct GridPoint {
  std::map<std::string, double> params;
  double score = 0.0;
};

struct GridReport {
  std::string policy;
  std::vector<GridPoint> table;
  std::size_t best = 0;

  const GridPoint& best_point() const { return table.at(best); }
};

/// Cartesian product of the grid, in lexicographic order of parameter name
/// and then of listed value order.
inline std::vector<std::map<std::string, double>> grid_points(const GridSpec& grid) {
  std::vector<std::map<std::string, double>> points{{}};
  for (const auto& [key, values] : grid.params) {
    if (values.empty()) throw ArgumentError("grid: no values for '" + key + "'");
    std::vector<std::map<std::string, double>> next;
    for (const auto& partial : points) {
      for (const double v : values) {
        auto p = partial;
        p[key] = v;
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

/// Scores every grid point with `eval` (lower is better) and keeps the
/// first minimiser.
template <class Eval>
GridReport grid_search(const GridSpec& grid, Eval&& eval) {
  const auto points = grid_points(grid);
  if (points.empty()) throw ArgumentError("grid: empty parameter grid");
  GridReport report;
  report.policy = grid.policy;
  for (const auto& params : points) {
    report.table.push_back({params, static_cast<double>(eval(params))});
    if (report.table.back().score < report.table[report.best].score) report.best = report.table.size() - 1;
  }
  return report;
}

/// Runs the experiment once per grid point (all with the config's seed),
/// scoring by final median-of-means regret. The best run is returned
/// through `best_result` when given.
inline GridReport grid_search(const ExperimentConfig& base, const RunOptions& options = {},
                              ExperimentResult* best_result = nullptr) {
  if (!base.grid) throw ConfigError("config has no 'grid' section");
  const GridSpec& grid = *base.grid;
  std::optional<ExperimentResult> best;
  auto report = grid_search(grid, [&](const std::map<std::string, double>& params) {
    ExperimentConfig cfg = base;
    cfg.policies = {PolicySpec{grid.policy, params}};
    auto result = run_experiment(cfg, options);
    const double score = result.policies.front().final_center();
    if (!best || score < best->policies.front().final_center()) best = std::move(result);
    return score;
  });
  if (best_result && best) *best_result = std::move(*best);
  return report;
}

inline Json to_json(const GridReport& report) {
  Json j;
  j["policy"] = report.policy;
  j["best"] = report.best_point().params;
  j["best_score"] = report.best_point().score;
  j["table"] = Json::array();
  for (const auto& point : report.table) j["table"].push_back({{"params", point.params}, {"score", point.score}});
  return j;
}

inline void write_grid_table(const GridReport& report, const std::filesystem::path& path) {
  auto out = detail::open_output(path);
  const auto& keys = report.table.front().params;
  for (const auto& [key, value] : keys) out << detail::csv_field(key) << ',';
  out << "final_regret\n";
  for (const auto& point : report.table) {
    for (const auto& [key, value] : point.params) out << detail::format_number(value) << ',';
    out << detail::format_number(point.score) << '\n';
  }
  detail::finish_output(out, path);
}

}  // namespace graphbandit
