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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexeff/costs.hpp"
#include "lexeff/lexicon.hpp"
#include "lexeff/semantics.hpp"

namespace lexeff {

enum class SearchMode { kGreedy, kExhaustive };

/// first, first + step, ..., last. Points are computed as first + i * step
/// so the grid does not accumulate rounding error.
std::vector<double> make_beta_grid(double first, double last, double step);
/// 0, 0.01, ..., 10 (1001 points).
std::vector<double> default_beta_grid();

struct FrontierParams {
  std::vector<double> beta_grid = default_beta_grid();
  SearchMode search_mode = SearchMode::kGreedy;
  std::size_t threads = 1;
};

/// Throws ValidationError unless the grid is non-empty, strictly increasing
/// and non-negative.
void validate_beta_grid(std::span<const double> grid);

/// The label space for one concept: the atomic forms F of the lexicon
/// followed by all ordered pairs, |F| + |F|^2 candidates in total.
///
/// Candidate i < |F| is atomic form i; candidate |F| + a * |F| + b is the
/// combination (F[a], F[b]). Surprisals are computed lazily and cached, so an
/// instance must not be shared between threads.
class CandidateSpace {
 public:
  CandidateSpace(const ListenerModel& listener, ConceptIndex concept_index);

  std::size_t atomic_count() const noexcept { return atomic_count_; }
  std::size_t size() const noexcept { return atomic_count_ + atomic_count_ * atomic_count_; }
  ConceptIndex concept_index() const noexcept { return concept_; }

  static std::size_t pair_index(std::size_t atomic_count, std::size_t first, std::size_t second) {
    return atomic_count + first * atomic_count + second;
  }

  double surprisal(std::size_t candidate);
  double length(std::size_t candidate) const;
  std::string surface(std::size_t candidate) const;
  Form form(std::size_t candidate) const;
  double cost(std::size_t candidate, double beta) { return surprisal(candidate) + beta * length(candidate); }

  /// Strict ordering by (cost, length, surface).
  bool better(std::size_t lhs, std::size_t rhs, double beta);

  std::size_t best_exhaustive(double beta);
  /// Best atomic u, then best of u alone or u followed by any atomic u'.
  std::size_t best_greedy(double beta);
  std::size_t best(double beta, SearchMode mode) {
    return mode == SearchMode::kGreedy ? best_greedy(beta) : best_exhaustive(beta);
  }

 private:
  const ListenerModel* listener_;
  ConceptIndex concept_;
  std::size_t atomic_count_;
  std::vector<double> atomic_lengths_;
  std::vector<double> surprisal_;
  std::vector<bool> known_;
};

/// Minimizer of surprisal + beta * length over the candidate space. Throws
/// ValidationError for an empty lexicon.
Form optimal_label(ConceptIndex concept_index, const ListenerModel& listener, double beta,
                   SearchMode mode);

struct FrontierPoint {
  double beta = 0.0;
  Encoding encoding;
  /// Per-item length, surprisal and need weight, aligned with the encoding.
  std::vector<ItemCost> items;
  CostPoint cost;
};

struct FrontierResult {
  std::vector<FrontierPoint> points;
  /// Non-dominated, distinct cost points sorted by average length.
  std::vector<CostPoint> pareto_points;
  NeedDistribution need;
};

/// Optimal encodings of `concepts` for each beta under a fixed need
/// distribution. Concepts are optimized independently and in parallel; the
/// result does not depend on the thread count.
FrontierResult estimate_frontier(std::span<const ConceptIndex> concepts,
                                 const ListenerModel& listener, const FrontierParams& params,
                                 const NeedDistribution& need);

/// Drops dominated and duplicate points.
std::vector<CostPoint> pareto_filter(std::span<const CostPoint> points);
bool dominates(const CostPoint& a, const CostPoint& b);

struct EfficiencyLoss {
  /// max(raw, 0)
  double epsilon = 0.0;
  double argmin_beta = 0.0;
  /// Unclamped minimum gap; negative only when the frontier missed an optimum.
  double raw = 0.0;
};

/// min over the grid of L_beta[encoding] - L_beta[optimal encoding at beta],
/// ties resolved to the smallest beta.
EfficiencyLoss efficiency_loss(const CostPoint& cost, const FrontierResult& frontier);
/// Costs the encoding under the frontier's need distribution. Throws
/// ValidationError when the concept sets differ.
EfficiencyLoss efficiency_loss(const Encoding& encoding, const FrontierResult& frontier,
                               const ListenerModel& listener);
/// Item-level loss of labelling `concept` with `form` relative to the
/// concept's own optimal labels.
EfficiencyLoss item_efficiency_loss(const Form& form, ConceptIndex concept_index,
                                    const FrontierResult& frontier, const ListenerModel& listener);
EfficiencyLoss item_efficiency_loss(double length, double surprisal, ConceptIndex concept_index,
                                    const FrontierResult& frontier);

}  // namespace lexeff
