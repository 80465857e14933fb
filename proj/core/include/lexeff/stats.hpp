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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace lexeff {

struct TTestResult {
  double t = 0.0;
  std::size_t df = 0;
  double p_two_sided = 1.0;
};

/// Student's two-sample t-test with pooled variance. Throws ValidationError
/// when either sample has fewer than two values or the pooled variance is
/// zero.
TTestResult t_test_pooled(std::span<const double> a, std::span<const double> b);

/// Two-sided p-value of a t statistic with `df` degrees of freedom.
double t_two_sided_p(double t, double df);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

enum class Statistic { kMean };

/// Mean computed as x0 + sum(x - x0) / n; exact for constant samples.
double mean(std::span<const double> sample);
double sample_variance(std::span<const double> sample);

/// Linear-interpolation quantile of sorted data, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

/// Percentile bootstrap interval at `level` (default 95%). Resample r draws
/// from CounterRng(seed, bootstrap stream, r). Throws ValidationError for an
/// empty sample.
Interval bootstrap_ci(std::span<const double> sample, Statistic statistic, std::size_t resamples,
                      std::uint64_t seed, double level = 0.95);

enum class CorrelationKind { kPearson, kSpearman };

/// Throws ValidationError for unequal lengths, fewer than three points or
/// zero variance.
double correlation(std::span<const double> x, std::span<const double> y, CorrelationKind kind);

}  // namespace lexeff
