// Copyright 2026 The lexeff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexeff/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "lexeff/error.hpp"
#include "lexeff/rng.hpp"

namespace lexeff {

namespace {
constexpr std::uint64_t kBootstrapStream = 0x626f6f7473747270ULL;
}

double mean(std::span<const double> sample) {
  if (sample.empty()) throw ValidationError("mean of an empty sample");
  const double anchor = sample.front();
  double offset = 0.0;
  for (double x : sample) offset += x - anchor;
  return anchor + offset / static_cast<double>(sample.size());
}

double sample_variance(std::span<const double> sample) {
  if (sample.size() < 2) throw ValidationError("variance needs at least two values");
  const double m = mean(sample);
  double ss = 0.0;
  for (double x : sample) ss += (x - m) * (x - m);
  return ss / static_cast<double>(sample.size() - 1);
}

double t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw ValidationError("t distribution needs df > 0");
  if (std::isinf(t)) return 0.0;
  boost::math::students_t dist(df);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t))));
}

TTestResult t_test_pooled(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw ValidationError("t-test needs at least two values per sample");
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double pooled = ((n1 - 1.0) * sample_variance(a) + (n2 - 1.0) * sample_variance(b)) / (n1 + n2 - 2.0);
  const double se = std::sqrt(pooled * (1.0 / n1 + 1.0 / n2));
  if (!(se > 0.0)) throw ValidationError("t-test: degenerate (zero) pooled variance");
  TTestResult result;
  result.df = a.size() + b.size() - 2;
  result.t = (mean(a) - mean(b)) / se;
  result.p_two_sided = t_two_sided_p(result.t, static_cast<double>(result.df));
  return result;
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw ValidationError("quantile of an empty sample");
  const double position = std::clamp(q, 0.0, 1.0) * static_cast<double>(sorted.size() - 1);
  const auto lower = static_cast<std::size_t>(std::floor(position));
  const std::size_t upper = std::min(lower + 1, sorted.size() - 1);
  const double fraction = position - static_cast<double>(lower);
  return sorted[lower] + fraction * (sorted[upper] - sorted[lower]);
}

Interval bootstrap_ci(std::span<const double> sample, Statistic statistic, std::size_t resamples, std::uint64_t seed,
                      double level) {
  if (sample.empty()) throw ValidationError("bootstrap needs a non-empty sample");
  if (resamples == 0) throw ValidationError("bootstrap needs at least one resample");
  if (!(level > 0.0 && level < 1.0)) throw ValidationError("confidence level must be in (0, 1)");
  (void)statistic;  // kMean is the only statistic.

  std::vector<double> stats(resamples);
  std::vector<double> draw(sample.size());
  for (std::size_t r = 0; r < resamples; ++r) {
    CounterRng rng(seed, kBootstrapStream, r);
    for (double& x : draw) x = sample[uniform_index(rng, sample.size())];
    stats[r] = mean(draw);
  }
  std::sort(stats.begin(), stats.end());
  const double alpha = 1.0 - level;
  return {quantile_sorted(stats, alpha / 2.0), quantile_sorted(stats, 1.0 - alpha / 2.0)};
}

namespace {

double pearson(std::span<const double> x, std::span<const double> y) {
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) throw ValidationError("correlation: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// 1-based ranks with ties averaged.
std::vector<double> ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) out[order[k]] = rank;
    i = j + 1;
  }
  return out;
}

}  // namespace

double correlation(std::span<const double> x, std::span<const double> y, CorrelationKind kind) {
  if (x.size() != y.size()) throw ValidationError("correlation: samples differ in length");
  if (x.size() < 3) throw ValidationError("correlation needs at least three points");
  if (kind == CorrelationKind::kPearson) return pearson(x, y);
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  return pearson(rx, ry);
}

}  // namespace lexeff
