#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "graphbandit/env.hpp"
#include "graphbandit/errors.hpp"
#include "graphbandit/graph.hpp"
#include "graphbandit/graphalgo.hpp"
#include "graphbandit/rng.hpp"

namespace graphbandit {

/// Independent Beta(S_i, F_i) posterior per arm, started at Beta(1, 1).
struct BetaPosterior {
  std::vector<std::uint64_t> successes;
  std::vector<std::uint64_t> failures;

  explicit BetaPosterior(std::size_t arms = 0) : successes(arms, 1), failures(arms, 1) {}

  std::size_t arm_count() const noexcept { return successes.size(); }
  std::uint64_t observations(Arm a) const { return successes.at(a) + failures.at(a) - 2; }

  void update(Arm a, bool success) {
    if (success) {
      ++successes[a];
    } else {
      ++failures[a];
    }
  }
};

/// Per-arm observation count and running mean. The mean is NaN until the
/// arm has been observed at least once.
struct EmpiricalStats {
  std::vector<std::uint64_t> counts;
  std::vector<double> means;

  explicit EmpiricalStats(std::size_t arms = 0)
      : counts(arms, 0), means(arms, std::numeric_limits<double>::quiet_NaN()) {}

  std::size_t arm_count() const noexcept { return counts.size(); }
  bool observed(Arm a) const { return counts.at(a) > 0; }

  void update(Arm a, double value) {
    const auto n = ++counts[a];
    means[a] = n == 1 ? value : means[a] + (value - means[a]) / static_cast<double>(n);
  }
};

/// Beta draws as X / (X + Y) with X ~ Gamma(a), Y ~ Gamma(b).
///
/// Keeps one gamma distribution object alive so its cached normal deviate
/// carries across calls; the draw sequence is still a pure function of the
/// engine state and the sequence of parameters.
class BetaSampler {
 public:
  double operator()(Engine& rng, double a, double b) {
    using Param = std::gamma_distribution<double>::param_type;
    const double x = gamma_(rng, Param(a, 1.0));
    const double y = gamma_(rng, Param(b, 1.0));
    return x / (x + y);
  }

 private:
  std::gamma_distribution<double> gamma_;
};

/// Maps an observed reward to {0, 1}: binary values pass through and leave
/// the engine untouched; values in (0, 1) become a Bernoulli draw.
inline bool binarize_reward(double value, Engine& rng) {
  if (value == 0.0) return false;
  if (value == 1.0) return true;
  if (!(value > 0.0 && value < 1.0)) throw DataError("reward " + std::to_string(value) + " outside [0,1]");
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < value;
}

namespace detail {

inline void check_arm(Arm a, std::size_t arms) {
  if (a >= arms) throw ArgumentError("observed arm " + std::to_string(a) + " out of range");
}

}  // namespace detail

inline void ingest(BetaPosterior& posterior, const Observation& obs, Engine& rng) {
  for (const auto& [arm, value] : obs.observed) {
    detail::check_arm(arm, posterior.arm_count());
    posterior.update(arm, binarize_reward(value, rng));
  }
}

inline void ingest(EmpiricalStats& stats, const Observation& obs, Engine& rng) {
  for (const auto& [arm, value] : obs.observed) {
    detail::check_arm(arm, stats.arm_count());
    stats.update(arm, binarize_reward(value, rng) ? 1.0 : 0.0);
  }
}

/// Updates both states from one binarised draw per observation.
inline void ingest(BetaPosterior& posterior, EmpiricalStats& stats, const Observation& obs, Engine& rng) {
  for (const auto& [arm, value] : obs.observed) {
    detail::check_arm(arm, posterior.arm_count());
    detail::check_arm(arm, stats.arm_count());
    const bool hit = binarize_reward(value, rng);
    posterior.update(arm, hit);
    stats.update(arm, hit ? 1.0 : 0.0);
  }
}

/// Samples theta_i ~ Beta(S_i, F_i) for every arm and returns the argmax
/// (lowest index on ties).
inline Arm tsn_select(const BetaPosterior& posterior, BetaSampler& beta, Engine& rng) {
  Arm best = 0;
  double best_theta = -1.0;
  for (Arm i = 0; i < posterior.arm_count(); ++i) {
    const double theta =
        beta(rng, static_cast<double>(posterior.successes[i]), static_cast<double>(posterior.failures[i]));
    if (theta > best_theta) {
      best_theta = theta;
      best = i;
    }
  }
  return best;
}

/// Highest empirical mean within `candidates` (ascending arm ids), lowest
/// id on ties. Unobserved arms never win over observed ones; if nothing is
/// observed the fallback is returned.
inline Arm best_empirical_in(const EmpiricalStats& stats, std::span<const Vertex> candidates, Arm fallback) {
  Arm best = fallback;
  double best_mean = -std::numeric_limits<double>::infinity();
  for (const Arm k : candidates) {
    if (stats.counts[k] == 0) continue;
    if (stats.means[k] > best_mean) {
      best_mean = stats.means[k];
      best = k;
    }
  }
  return best;
}

/// Global empirical argmax; arm 0 when nothing has been observed.
inline Arm empirical_argmax(const EmpiricalStats& stats) {
  Arm best = 0;
  double best_mean = -std::numeric_limits<double>::infinity();
  for (Arm k = 0; k < stats.arm_count(); ++k) {
    if (stats.counts[k] == 0) continue;
    if (stats.means[k] > best_mean) {
      best_mean = stats.means[k];
      best = k;
    }
  }
  return best;
}

/// Thompson-samples an arm j, then plays the empirically best member of
/// j's feedback set.
template <class Probe>
Arm ts_maxn_select(const BetaPosterior& posterior, const EmpiricalStats& stats, const Probe& probe,
                   BetaSampler& beta, Engine& rng) {
  const Arm sampled = tsn_select(posterior, beta, rng);
  return best_empirical_in(stats, probe(sampled), sampled);
}

/// UCB1 index argmax: mean + sqrt(2 ln t / n). Unobserved arms have
/// infinite index, so the lowest-id unobserved arm is returned first.
inline Arm ucbn_select(const EmpiricalStats& stats, Round t) {
  if (t == 0) throw ArgumentError("rounds are numbered from 1");
  const double log_t = std::log(static_cast<double>(t));
  Arm best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (Arm i = 0; i < stats.arm_count(); ++i) {
    if (stats.counts[i] == 0) return i;
    const double index = stats.means[i] + std::sqrt(2.0 * log_t / static_cast<double>(stats.counts[i]));
    if (index > best_index) {
      best_index = index;
      best = i;
    }
  }
  return best;
}

template <class Probe>
Arm ucb_maxn_select(const EmpiricalStats& stats, Round t, const Probe& probe) {
  const Arm j = ucbn_select(stats, t);
  return best_empirical_in(stats, probe(j), j);
}

struct EpsGreedyConfig {
  double c = 1.0;
  double d = 0.05;
  DominatingSet dominating_set;

  void validate() const {
    if (!(c > 0.0)) throw ArgumentError("eps-greedy-d: c must be positive");
    if (!(d > 0.0 && d <= 1.0)) throw ArgumentError("eps-greedy-d: d must lie in (0,1]");
    if (dominating_set.size() == 0) throw ArgumentError("eps-greedy-d: dominating set is empty");
  }
};

/// eps_t = min(1, c |D| / (d^2 t)).
inline double exploration_rate(const EpsGreedyConfig& cfg, Round t) {
  if (t == 0) throw ArgumentError("rounds are numbered from 1");
  const double eps =
      cfg.c * static_cast<double>(cfg.dominating_set.size()) / (cfg.d * cfg.d * static_cast<double>(t));
  return std::min(1.0, eps);
}

/// With probability eps_t plays a uniform member of the dominating set,
/// otherwise the global empirical argmax. Always consumes one uniform for
/// the coin, plus one index draw when exploring.
inline Arm eps_greedy_d_select(const EmpiricalStats& stats, const EpsGreedyConfig& cfg, Round t, Engine& rng) {
  const double eps = exploration_rate(cfg, t);
  const double coin = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (coin < eps) {
    const auto& members = cfg.dominating_set.vertices;
    return members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
  }
  return empirical_argmax(stats);
}

// ---------------------------------------------------------------------------
// Runtime-polymorphic wrappers used by the experiment runner.

struct RoundContext {
  Round t;
  NeighborhoodProbe probe;
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual Arm select(const RoundContext& ctx, Engine& rng) = 0;
  virtual void ingest(const Observation& obs, Engine& rng) = 0;
};

namespace detail {

/// Reduces an observation to the played arm only.
inline const Observation& played_only(const Observation& obs, Observation& scratch) {
  scratch.round = obs.round;
  scratch.played = obs.played;
  scratch.reward = obs.reward;
  scratch.observed.assign(1, ObservedReward{obs.played, obs.reward});
  return scratch;
}

}  // namespace detail

/// TS-N; with `graph_blind` it discards side observations (plain Thompson
/// sampling).
class ThompsonPolicy final : public Policy {
 public:
  ThompsonPolicy(std::size_t arms, bool graph_blind) : posterior_(arms), graph_blind_(graph_blind) {}

  Arm select(const RoundContext&, Engine& rng) override { return tsn_select(posterior_, beta_, rng); }

  void ingest(const Observation& obs, Engine& rng) override {
    graphbandit::ingest(posterior_, graph_blind_ ? detail::played_only(obs, scratch_) : obs, rng);
  }

  const BetaPosterior& posterior() const noexcept { return posterior_; }

 private:
  BetaPosterior posterior_;
  BetaSampler beta_;
  bool graph_blind_;
  Observation scratch_;
};

class ThompsonMaxPolicy final : public Policy {
 public:
  explicit ThompsonMaxPolicy(std::size_t arms) : posterior_(arms), stats_(arms) {}

  Arm select(const RoundContext& ctx, Engine& rng) override {
    return ts_maxn_select(posterior_, stats_, ctx.probe, beta_, rng);
  }

  void ingest(const Observation& obs, Engine& rng) override { graphbandit::ingest(posterior_, stats_, obs, rng); }

  const BetaPosterior& posterior() const noexcept { return posterior_; }
  const EmpiricalStats& stats() const noexcept { return stats_; }

 private:
  BetaPosterior posterior_;
  EmpiricalStats stats_;
  BetaSampler beta_;
};

/// UCB-N, UCB-MaxN, or (graph-blind) plain UCB1.
class UcbPolicy final : public Policy {
 public:
  enum class Mode { kNeighborhood, kMaxNeighborhood, kBandit };

  UcbPolicy(std::size_t arms, Mode mode) : stats_(arms), mode_(mode) {}

  Arm select(const RoundContext& ctx, Engine&) override {
    return mode_ == Mode::kMaxNeighborhood ? ucb_maxn_select(stats_, ctx.t, ctx.probe) : ucbn_select(stats_, ctx.t);
  }

  void ingest(const Observation& obs, Engine& rng) override {
    graphbandit::ingest(stats_, mode_ == Mode::kBandit ? detail::played_only(obs, scratch_) : obs, rng);
  }

  const EmpiricalStats& stats() const noexcept { return stats_; }

 private:
  EmpiricalStats stats_;
  Mode mode_;
  Observation scratch_;
};

class EpsGreedyDPolicy final : public Policy {
 public:
  EpsGreedyDPolicy(std::size_t arms, EpsGreedyConfig cfg) : stats_(arms), cfg_(std::move(cfg)) { cfg_.validate(); }

  Arm select(const RoundContext& ctx, Engine& rng) override { return eps_greedy_d_select(stats_, cfg_, ctx.t, rng); }
  void ingest(const Observation& obs, Engine& rng) override { graphbandit::ingest(stats_, obs, rng); }

  const EmpiricalStats& stats() const noexcept { return stats_; }

 private:
  EmpiricalStats stats_;
  EpsGreedyConfig cfg_;
};

inline const std::vector<std::string>& policy_names() {
  static const std::vector<std::string> names{"ts-n",         "ts-maxn",  "ucb-n",     "ucb-maxn",
                                              "eps-greedy-d", "ts-bandit", "ucb-bandit"};
  return names;
}

inline bool is_policy_name(const std::string& name) {
  for (const auto& n : policy_names()) {
    if (n == name) return true;
  }
  return false;
}

/// A named policy plus hyperparameters, as written in experiment configs.
struct PolicySpec {
  std::string name;
  std::map<std::string, double> params;  // only eps-greedy-d reads any (c, d)

  double param(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }

  /// Display name, unique per configuration, e.g. "eps-greedy-d(c=1,d=0.05)".
  std::string label() const {
    if (params.empty()) return name;
    std::string out = name + "(";
    bool first = true;
    for (const auto& [key, value] : params) {
      if (!first) out += ",";
      first = false;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%g", value);
      out += key + "=" + buf;
    }
    return out + ")";
  }

  bool operator==(const PolicySpec&) const = default;
};

/// Instantiates a policy. `dominating_set` is only read by eps-greedy-d.
inline std::unique_ptr<Policy> make_policy(const PolicySpec& spec, std::size_t arms,
                                           const DominatingSet& dominating_set) {
  if (spec.name == "ts-n") return std::make_unique<ThompsonPolicy>(arms, false);
  if (spec.name == "ts-bandit") return std::make_unique<ThompsonPolicy>(arms, true);
  if (spec.name == "ts-maxn") return std::make_unique<ThompsonMaxPolicy>(arms);
  if (spec.name == "ucb-n") return std::make_unique<UcbPolicy>(arms, UcbPolicy::Mode::kNeighborhood);
  if (spec.name == "ucb-maxn") return std::make_unique<UcbPolicy>(arms, UcbPolicy::Mode::kMaxNeighborhood);
  if (spec.name == "ucb-bandit") return std::make_unique<UcbPolicy>(arms, UcbPolicy::Mode::kBandit);
  if (spec.name == "eps-greedy-d") {
    return std::make_unique<EpsGreedyDPolicy>(
        arms, EpsGreedyConfig{spec.param("c", 1.0), spec.param("d", 0.05), dominating_set});
  }
  throw ArgumentError("unknown policy '" + spec.name + "'");
}

}  // namespace graphbandit
