#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "graphbandit/errors.hpp"
#include "graphbandit/rng.hpp"

namespace graphbandit {

/// Median of a sample; the mean of the two middle values when even.
inline double median(std::vector<double> values) {
  if (values.empty()) throw ArgumentError("median of an empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

/// Random assignment of `n` items to `groups` groups of equal size:
/// entry i is the group of item i.
inline std::vector<std::size_t> random_equipartition(std::size_t n, std::size_t groups, Engine& rng) {
  if (groups == 0) throw ArgumentError("median-of-means needs at least one group");
  if (n == 0 || n % groups != 0) {
    throw ArgumentError("sample size " + std::to_string(n) + " is not divisible into " + std::to_string(groups) +
                        " equal groups");
  }
  std::vector<std::size_t> group_of(n);
  for (std::size_t i = 0; i < n; ++i) group_of[i] = i % groups;
  std::shuffle(group_of.begin(), group_of.end(), rng);
  return group_of;
}

/// Median of the group means under a fixed assignment.
inline double median_of_means(std::span<const double> values, std::span<const std::size_t> group_of,
                              std::size_t groups) {
  if (values.size() != group_of.size()) throw ArgumentError("group assignment does not match sample size");
  if (groups == 0 || values.empty() || values.size() % groups != 0) {
    throw ArgumentError("sample size " + std::to_string(values.size()) + " is not divisible into " +
                        std::to_string(groups) + " equal groups");
  }
  std::vector<double> sums(groups, 0.0);
  std::vector<std::size_t> sizes(groups, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (group_of[i] >= groups) throw ArgumentError("group index out of range");
    sums[group_of[i]] += values[i];
    ++sizes[group_of[i]];
  }
  for (std::size_t g = 0; g < groups; ++g) {
    if (sizes[g] != values.size() / groups) throw ArgumentError("groups are not of equal size");
    sums[g] /= static_cast<double>(sizes[g]);
  }
  return median(std::move(sums));
}

inline double median_of_means(std::span<const double> values, std::size_t groups, Engine& rng) {
  const auto group_of = random_equipartition(values.size(), groups, rng);
  return median_of_means(values, group_of, groups);
}

namespace detail {

/// sum_j (2j - N - 1) x_(j) over an already sorted range, evaluated in the
/// equivalent gap form  sum_j j (N - j) (x_(j+1) - x_(j)). Every term is
/// nonnegative, so the result is exactly 0 for constant samples and never
/// dips below 0 through cancellation.
inline double gini_raw_sorted(std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  double acc = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    acc += static_cast<double>(j) * static_cast<double>(n - j) * (sorted[j] - sorted[j - 1]);
  }
  return acc;
}

inline double pair_count(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

}  // namespace detail

/// Order-statistic sum  sum_j (2j - N - 1) x_(j), without normalisation.
inline double gini_raw_sum(std::span<const double> values) {
  if (values.size() < 2) throw ArgumentError("Gini mean difference needs at least 2 values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return detail::gini_raw_sorted(sorted);
}

/// Gini mean difference: the raw order-statistic sum divided by the number
/// of pairs, i.e. the mean absolute difference over distinct pairs.
inline double gini_mean_difference(std::span<const double> values) {
  return gini_raw_sum(values) / detail::pair_count(values.size());
}

struct SplitDeviation {
  double lower = 0.0;
  double upper = 0.0;
  double lower_raw = 0.0;
  double upper_raw = 0.0;
};

namespace detail {

inline SplitDeviation split_deviation_sorted(std::span<const double> sorted, double center) {
  const auto cut = static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), center) - sorted.begin());
  SplitDeviation out;
  const auto below = sorted.first(cut);
  const auto above = sorted.subspan(cut);
  if (below.size() >= 2) {
    out.lower_raw = gini_raw_sorted(below);
    out.lower = out.lower_raw / pair_count(below.size());
  }
  if (above.size() >= 2) {
    out.upper_raw = gini_raw_sorted(above);
    out.upper = out.upper_raw / pair_count(above.size());
  }
  return out;
}

}  // namespace detail

/// GMD of the values at or below `center` and of those above it. A side
/// with fewer than two values has deviation 0.
inline SplitDeviation split_deviation(std::span<const double> values, double center) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return detail::split_deviation_sorted(sorted, center);
}

/// Per-round robust summary of N regret curves.
struct SummaryCurve {
  std::vector<double> center;
  std::vector<double> dev_lower;
  std::vector<double> dev_upper;
  std::vector<double> dev_lower_raw;
  std::vector<double> dev_upper_raw;
  std::size_t trials = 0;
  std::size_t groups = 0;

  std::size_t length() const noexcept { return center.size(); }
};

/// Summarises with a fixed group assignment shared by every round, so the
/// centre curve is coherent in t.
inline SummaryCurve summarize(std::span<const std::vector<double>> curves, std::span<const std::size_t> group_of,
                              std::size_t groups) {
  if (curves.empty()) throw ArgumentError("summarize needs at least one curve");
  const std::size_t length = curves.front().size();
  for (const auto& c : curves) {
    if (c.size() != length) throw ArgumentError("regret curves differ in length");
  }
  SummaryCurve out;
  out.trials = curves.size();
  out.groups = groups;
  out.center.resize(length);
  out.dev_lower.resize(length);
  out.dev_upper.resize(length);
  out.dev_lower_raw.resize(length);
  out.dev_upper_raw.resize(length);
  std::vector<double> column(curves.size());
  for (std::size_t t = 0; t < length; ++t) {
    for (std::size_t i = 0; i < curves.size(); ++i) column[i] = curves[i][t];
    const double center = median_of_means(column, group_of, groups);
    std::sort(column.begin(), column.end());
    const auto dev = detail::split_deviation_sorted(column, center);
    out.center[t] = center;
    out.dev_lower[t] = dev.lower;
    out.dev_upper[t] = dev.upper;
    out.dev_lower_raw[t] = dev.lower_raw;
    out.dev_upper_raw[t] = dev.upper_raw;
  }
  return out;
}

inline SummaryCurve summarize(std::span<const std::vector<double>> curves, std::size_t groups, Engine& rng) {
  const auto group_of = random_equipartition(curves.size(), groups, rng);
  return summarize(curves, group_of, groups);
}

}  // namespace graphbandit
