#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "graphbandit/errors.hpp"
#include "graphbandit/graph.hpp"
#include "graphbandit/rng.hpp"

namespace graphbandit {

/// Hidden problem instance: one Bernoulli mean per arm.
class BernoulliBandit {
 public:
  BernoulliBandit() = default;

  explicit BernoulliBandit(std::vector<double> means) : means_(std::move(means)) {
    if (means_.empty()) throw ArgumentError("bandit needs at least one arm");
    for (std::size_t i = 0; i < means_.size(); ++i) {
      if (!(means_[i] >= 0.0 && means_[i] <= 1.0)) {
        throw ArgumentError("mean of arm " + std::to_string(i) + " outside [0,1]");
      }
      if (means_[i] > means_[optimal_arm_]) optimal_arm_ = static_cast<Arm>(i);
    }
  }

  std::size_t arm_count() const noexcept { return means_.size(); }
  std::span<const double> means() const noexcept { return means_; }
  double mean(Arm a) const { return means_.at(a); }
  Arm optimal_arm() const noexcept { return optimal_arm_; }
  double optimal_mean() const noexcept { return means_[optimal_arm_]; }

  /// mu* - mu_a, never negative.
  double gap(Arm a) const { return optimal_mean() - mean(a); }

  bool operator==(const BernoulliBandit&) const = default;

 private:
  std::vector<double> means_;
  Arm optimal_arm_ = 0;
};

/// Draws a problem instance from the experimental prior: one uniformly
/// chosen arm gets a mean in [0.55, 0.6], every other arm one in [0.45, 0.55].
inline BernoulliBandit sample_instance(std::size_t k, Engine& rng) {
  if (k < 2) throw ArgumentError("sample_instance needs at least 2 arms");
  const auto best = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
  std::uniform_real_distribution<double> good(0.55, 0.6);
  std::uniform_real_distribution<double> rest(0.45, 0.55);
  std::vector<double> means(k);
  for (std::size_t i = 0; i < k; ++i) means[i] = i == best ? good(rng) : rest(rng);
  return BernoulliBandit(std::move(means));
}

struct ObservedReward {
  Arm arm;
  double value;
  bool operator==(const ObservedReward&) const = default;
};

/// What the learner sees after playing one round.
struct Observation {
  Round round = 0;
  Arm played = 0;
  double reward = 0.0;
  std::vector<ObservedReward> observed;  // ascending by arm, includes `played`
};

/// Counter-based reward source. The outcome of arm j at round t is a pure
/// function of (key, t, j), so every policy run against the same key sees
/// the same realisations no matter which arms it plays.
class RewardStream {
 public:
  explicit RewardStream(std::uint64_t key = 0) : key_(key) {}

  double uniform(Round t, Arm a) const noexcept {
    return to_unit(splitmix64(splitmix64(key_ ^ splitmix64(t)) ^ (static_cast<std::uint64_t>(a) + 1)));
  }

  double bernoulli(Round t, Arm a, double mean) const noexcept { return uniform(t, a) < mean ? 1.0 : 0.0; }

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
};

inline std::span<const Vertex> neighborhood_probe(const GraphSequence& graphs, Round t, Arm a) {
  return graphs.at(t).closed_neighborhood(a);
}

/// Callable handed to policies so they can look up the feedback set of any
/// arm under the current round's graph, without seeing the graph itself.
class NeighborhoodProbe {
 public:
  NeighborhoodProbe(const GraphSequence& graphs, Round t) : graph_(&graphs.at(t)) {}
  explicit NeighborhoodProbe(const Graph& g) : graph_(&g) {}

  std::span<const Vertex> operator()(Arm a) const { return graph_->closed_neighborhood(a); }

 private:
  const Graph* graph_;
};

/// Plays arm `a` at round `t`: the played arm and every neighbour under G_t
/// reveal their Bernoulli outcome.
inline void step(const BernoulliBandit& bandit, const GraphSequence& graphs, Round t, Arm a,
                 const RewardStream& rewards, Observation& out) {
  if (t == 0) throw ArgumentError("rounds are numbered from 1");
  if (a >= bandit.arm_count()) throw ArgumentError("arm " + std::to_string(a) + " out of range");
  const auto feedback = graphs.at(t).closed_neighborhood(a);
  out.round = t;
  out.played = a;
  out.observed.clear();
  for (const Arm j : feedback) {
    const double value = rewards.bernoulli(t, j, bandit.mean(j));
    out.observed.push_back({j, value});
    if (j == a) out.reward = value;
  }
}

inline Observation step(const BernoulliBandit& bandit, const GraphSequence& graphs, Round t, Arm a,
                        const RewardStream& rewards) {
  Observation obs;
  step(bandit, graphs, t, a, rewards, obs);
  return obs;
}

/// One trial's environment: instance, graph sequence and reward stream.
class Environment {
 public:
  Environment(const BernoulliBandit& bandit, const GraphSequence& graphs, RewardStream rewards)
      : bandit_(&bandit), graphs_(&graphs), rewards_(rewards) {
    if (bandit.arm_count() != graphs.vertex_count()) {
      throw ArgumentError("bandit has " + std::to_string(bandit.arm_count()) + " arms but graph has " +
                          std::to_string(graphs.vertex_count()) + " vertices");
    }
  }

  void step(Round t, Arm a, Observation& out) const { graphbandit::step(*bandit_, *graphs_, t, a, rewards_, out); }
  Observation step(Round t, Arm a) const { return graphbandit::step(*bandit_, *graphs_, t, a, rewards_); }

  std::span<const Vertex> neighborhood_probe(Round t, Arm a) const {
    return graphbandit::neighborhood_probe(*graphs_, t, a);
  }
  NeighborhoodProbe probe(Round t) const { return NeighborhoodProbe(*graphs_, t); }

  double pseudo_regret(Arm a) const { return bandit_->gap(a); }

  const BernoulliBandit& bandit() const noexcept { return *bandit_; }
  std::size_t arm_count() const noexcept { return bandit_->arm_count(); }

 private:
  const BernoulliBandit* bandit_;
  const GraphSequence* graphs_;
  RewardStream rewards_;
};

}  // namespace graphbandit
