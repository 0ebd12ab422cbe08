#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphbandit/errors.hpp"
#include "graphbandit/graph.hpp"
#include "graphbandit/policies.hpp"

namespace graphbandit {

using Json = nlohmann::json;

/// Which graph (or graph schedule) an experiment runs on.
///
///   empty              n
///   complete           n
///   erdos_renyi        n, m  (or n, p)
///   power_law          n, m, exponent
///   planted_partition  n, k, p, q
///   edge_list          path, remap
///   schedule           graphs (list of the above), dwell
struct GraphSpec {
  std::string type = "empty";
  std::size_t n = 0;
  std::optional<std::uint64_t> m;
  std::optional<double> p;
  double q = 0.0;
  std::size_t k = 1;
  double exponent = 2.5;
  std::string path;
  bool remap = false;
  std::vector<GraphSpec> schedule;
  std::size_t dwell = 1;

  bool operator==(const GraphSpec&) const = default;
};

struct GridSpec {
  std::string policy;
  std::map<std::string, std::vector<double>> params;

  bool operator==(const GridSpec&) const = default;
};

/// Everything that determines an experiment's outputs.
struct ExperimentConfig {
  std::string name = "experiment";
  std::uint64_t seed = 1;
  Round horizon = 100000;
  std::size_t trials = 210;
  std::size_t groups = 14;
  bool bayesian = true;  // resample the instance per trial, else one fixed instance
  Round record_every = 0;  // 0 picks a stride from the horizon
  GraphSpec graph;
  std::vector<PolicySpec> policies;
  std::string output = "out";
  bool verbose_curves = false;
  std::optional<GridSpec> grid;
  std::vector<std::size_t> sweep_k;

  bool operator==(const ExperimentConfig&) const = default;

  void validate() const;
};

namespace detail {

inline void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
T required(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": missing required key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
  }
}

template <class T>
T optional_or(const Json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
  }
}

}  // namespace detail

inline Json to_json(const GraphSpec& g) {
  Json j;
  j["type"] = g.type;
  if (g.type == "empty" || g.type == "complete") {
    j["n"] = g.n;
  } else if (g.type == "erdos_renyi") {
    j["n"] = g.n;
    if (g.m) j["m"] = *g.m;
    if (g.p) j["p"] = *g.p;
  } else if (g.type == "power_law") {
    j["n"] = g.n;
    j["m"] = g.m.value_or(0);
    j["exponent"] = g.exponent;
  } else if (g.type == "planted_partition") {
    j["n"] = g.n;
    j["k"] = g.k;
    j["p"] = g.p.value_or(1.0);
    j["q"] = g.q;
  } else if (g.type == "edge_list") {
    j["path"] = g.path;
    j["remap"] = g.remap;
  } else if (g.type == "schedule") {
    j["dwell"] = g.dwell;
    j["graphs"] = Json::array();
    for (const auto& child : g.schedule) j["graphs"].push_back(to_json(child));
  }
  return j;
}

inline GraphSpec graph_spec_from_json(const Json& j, const std::string& where = "graph") {
  GraphSpec g;
  g.type = detail::required<std::string>(j, "type", where);
  if (g.type == "empty" || g.type == "complete") {
    detail::reject_unknown_keys(j, {"type", "n"}, where);
    g.n = detail::required<std::size_t>(j, "n", where);
  } else if (g.type == "erdos_renyi") {
    detail::reject_unknown_keys(j, {"type", "n", "m", "p"}, where);
    g.n = detail::required<std::size_t>(j, "n", where);
    if (j.contains("m")) g.m = detail::required<std::uint64_t>(j, "m", where);
    if (j.contains("p")) g.p = detail::required<double>(j, "p", where);
    if (g.m.has_value() == g.p.has_value()) throw ConfigError(where + ": erdos_renyi needs exactly one of 'm' or 'p'");
  } else if (g.type == "power_law") {
    detail::reject_unknown_keys(j, {"type", "n", "m", "exponent"}, where);
    g.n = detail::required<std::size_t>(j, "n", where);
    g.m = detail::required<std::uint64_t>(j, "m", where);
    g.exponent = detail::optional_or<double>(j, "exponent", 2.5, where);
  } else if (g.type == "planted_partition") {
    detail::reject_unknown_keys(j, {"type", "n", "k", "p", "q"}, where);
    g.n = detail::required<std::size_t>(j, "n", where);
    g.k = detail::required<std::size_t>(j, "k", where);
    g.p = detail::required<double>(j, "p", where);
    g.q = detail::required<double>(j, "q", where);
  } else if (g.type == "edge_list") {
    detail::reject_unknown_keys(j, {"type", "path", "remap"}, where);
    g.path = detail::required<std::string>(j, "path", where);
    g.remap = detail::optional_or<bool>(j, "remap", false, where);
  } else if (g.type == "schedule") {
    detail::reject_unknown_keys(j, {"type", "graphs", "dwell"}, where);
    g.dwell = detail::optional_or<std::size_t>(j, "dwell", 1, where);
    const auto& list = j.contains("graphs") ? j.at("graphs") : Json();
    if (!list.is_array() || list.empty()) throw ConfigError(where + ": schedule needs a non-empty 'graphs' list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto child = graph_spec_from_json(list[i], where + ".graphs[" + std::to_string(i) + "]");
      if (child.type == "schedule") throw ConfigError(where + ": schedules cannot be nested");
      g.schedule.push_back(std::move(child));
    }
  } else {
    throw ConfigError(where + ": unknown graph type '" + g.type + "'");
  }
  return g;
}

inline Json to_json(const PolicySpec& p) {
  Json j;
  j["name"] = p.name;
  for (const auto& [key, value] : p.params) j[key] = value;
  return j;
}

inline PolicySpec policy_spec_from_json(const Json& j, const std::string& where) {
  PolicySpec p;
  p.name = detail::required<std::string>(j, "name", where);
  if (!is_policy_name(p.name)) throw ConfigError(where + ": unknown policy '" + p.name + "'");
  if (p.name == "eps-greedy-d") {
    detail::reject_unknown_keys(j, {"name", "c", "d"}, where);
    p.params["c"] = detail::optional_or<double>(j, "c", 1.0, where);
    p.params["d"] = detail::optional_or<double>(j, "d", 0.05, where);
  } else {
    detail::reject_unknown_keys(j, {"name"}, where);
  }
  return p;
}

inline Json to_json(const GridSpec& g) {
  Json j;
  j["policy"] = g.policy;
  j["params"] = Json::object();
  for (const auto& [key, values] : g.params) j["params"][key] = values;
  return j;
}

inline GridSpec grid_spec_from_json(const Json& j) {
  detail::reject_unknown_keys(j, {"policy", "params"}, "grid");
  GridSpec g;
  g.policy = detail::required<std::string>(j, "policy", "grid");
  if (!is_policy_name(g.policy)) throw ConfigError("grid: unknown policy '" + g.policy + "'");
  g.params = detail::required<std::map<std::string, std::vector<double>>>(j, "params", "grid");
  return g;
}

inline Json to_json(const ExperimentConfig& cfg) {
  Json j;
  j["name"] = cfg.name;
  j["seed"] = cfg.seed;
  j["horizon"] = cfg.horizon;
  j["trials"] = cfg.trials;
  j["groups"] = cfg.groups;
  j["bayesian"] = cfg.bayesian;
  j["record_every"] = cfg.record_every;
  j["graph"] = to_json(cfg.graph);
  j["policies"] = Json::array();
  for (const auto& p : cfg.policies) j["policies"].push_back(to_json(p));
  j["output"] = cfg.output;
  j["verbose_curves"] = cfg.verbose_curves;
  if (cfg.grid) j["grid"] = to_json(*cfg.grid);
  if (!cfg.sweep_k.empty()) j["sweep_k"] = cfg.sweep_k;
  return j;
}

inline void ExperimentConfig::validate() const {
  if (horizon < 1) throw ConfigError("horizon must be at least 1");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (groups < 1 || trials % groups != 0) {
    throw ConfigError("groups (" + std::to_string(groups) + ") must divide trials (" + std::to_string(trials) + ")");
  }
  if (policies.empty() && !grid) throw ConfigError("no policies configured");
  std::set<std::string> labels;
  for (const auto& p : policies) {
    if (!is_policy_name(p.name)) throw ConfigError("unknown policy '" + p.name + "'");
    if (!labels.insert(p.label()).second) throw ConfigError("policy '" + p.label() + "' listed twice");
  }
  if (grid) {
    if (grid->params.empty()) throw ConfigError("grid: empty parameter grid");
    for (const auto& [key, values] : grid->params) {
      if (values.empty()) throw ConfigError("grid: no values for '" + key + "'");
    }
  }
}

/// Parses a config object. Also accepts a results meta.json, whose
/// "config" member is the config echo written by the runner.
inline ExperimentConfig config_from_json(const Json& root) {
  const Json& j = (root.contains("config") && root.contains("software")) ? root.at("config") : root;
  detail::reject_unknown_keys(j,
                              {"name", "seed", "horizon", "trials", "groups", "bayesian", "record_every", "graph",
                               "policies", "output", "verbose_curves", "grid", "sweep_k"},
                              "config");
  ExperimentConfig cfg;
  cfg.name = detail::optional_or<std::string>(j, "name", cfg.name, "config");
  cfg.seed = detail::optional_or<std::uint64_t>(j, "seed", cfg.seed, "config");
  cfg.horizon = detail::optional_or<Round>(j, "horizon", cfg.horizon, "config");
  cfg.trials = detail::optional_or<std::size_t>(j, "trials", cfg.trials, "config");
  cfg.groups = detail::optional_or<std::size_t>(j, "groups", cfg.groups, "config");
  cfg.bayesian = detail::optional_or<bool>(j, "bayesian", cfg.bayesian, "config");
  cfg.record_every = detail::optional_or<Round>(j, "record_every", cfg.record_every, "config");
  if (!j.contains("graph")) throw ConfigError("config: missing required key 'graph'");
  cfg.graph = graph_spec_from_json(j.at("graph"));
  if (j.contains("policies")) {
    const auto& list = j.at("policies");
    if (!list.is_array()) throw ConfigError("config: 'policies' must be a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      cfg.policies.push_back(policy_spec_from_json(list[i], "policies[" + std::to_string(i) + "]"));
    }
  }
  cfg.output = detail::optional_or<std::string>(j, "output", cfg.output, "config");
  cfg.verbose_curves = detail::optional_or<bool>(j, "verbose_curves", cfg.verbose_curves, "config");
  if (j.contains("grid")) cfg.grid = grid_spec_from_json(j.at("grid"));
  cfg.sweep_k = detail::optional_or<std::vector<std::size_t>>(j, "sweep_k", {}, "config");
  cfg.validate();
  return cfg;
}

namespace detail {

/// Edge-list paths in a config file are relative to the file's directory.
inline void resolve_paths(GraphSpec& g, const std::filesystem::path& base) {
  if (g.type == "edge_list" && std::filesystem::path(g.path).is_relative()) {
    g.path = (base / g.path).lexically_normal().string();
  }
  for (auto& child : g.schedule) resolve_paths(child, base);
}

}  // namespace detail

inline ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  auto cfg = config_from_json(j);
  detail::resolve_paths(cfg.graph, std::filesystem::absolute(path).parent_path());
  return cfg;
}

}  // namespace graphbandit
