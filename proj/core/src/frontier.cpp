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

#include "lexeff/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lexeff/error.hpp"
#include "lexeff/parallel.hpp"

namespace lexeff {

std::vector<double> make_beta_grid(double first, double last, double step) {
  if (!(step > 0.0) || !(last >= first) || !(first >= 0.0)) {
    throw ValidationError("beta grid needs 0 <= first <= last and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = first + static_cast<double>(i) * step;
  return grid;
}

std::vector<double> default_beta_grid() {
  // i / 100 rather than i * 0.01 so that grid points are the closest doubles
  // to their decimal values.
  std::vector<double> grid(1001);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = static_cast<double>(i) / 100.0;
  return grid;
}

void validate_beta_grid(std::span<const double> grid) {
  if (grid.empty()) throw ValidationError("beta grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) throw ValidationError("beta grid values must be finite and >= 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ValidationError("beta grid must be strictly increasing");
  }
}

CandidateSpace::CandidateSpace(const ListenerModel& listener, ConceptIndex concept_index)
    : listener_(&listener), concept_(concept_index), atomic_count_(listener.lexicon().atomic_forms().size()) {
  if (atomic_count_ == 0) throw ValidationError("lexicon has no atomic forms");
  const auto& forms = listener.lexicon().atomic_forms();
  atomic_lengths_.reserve(atomic_count_);
  for (const auto& surface : forms) {
    atomic_lengths_.push_back(static_cast<double>(listener.lexicon().form(surface).length_units));
  }
  surprisal_.assign(size(), 0.0);
  known_.assign(atomic_count_ + 1, false);
  for (std::size_t i = 0; i < atomic_count_; ++i) {
    surprisal_[i] = listener.surprisal(listener.lexicon_prototype(forms[i]), concept_index);
  }
  known_[0] = true;
}

double CandidateSpace::surprisal(std::size_t candidate) {
  if (candidate < atomic_count_) return surprisal_[candidate];
  const std::size_t row = (candidate - atomic_count_) / atomic_count_;
  if (!known_[row + 1]) {
    const auto& forms = listener_->lexicon().atomic_forms();
    for (std::size_t b = 0; b < atomic_count_; ++b) {
      const auto q = listener_->combination_prototype(forms[row], forms[b]);
      surprisal_[pair_index(atomic_count_, row, b)] = listener_->surprisal(q, concept_);
    }
    known_[row + 1] = true;
  }
  return surprisal_[candidate];
}

double CandidateSpace::length(std::size_t candidate) const {
  if (candidate < atomic_count_) return atomic_lengths_[candidate];
  const std::size_t offset = candidate - atomic_count_;
  const double joined = atomic_lengths_[offset / atomic_count_] + atomic_lengths_[offset % atomic_count_];
  return listener_->lexicon().length_mode() == LengthMode::kOrthographic ? joined + 1.0 : joined;
}

std::string CandidateSpace::surface(std::size_t candidate) const {
  const auto& forms = listener_->lexicon().atomic_forms();
  if (candidate < atomic_count_) return forms[candidate];
  const std::size_t offset = candidate - atomic_count_;
  std::string out = forms[offset / atomic_count_];
  out.push_back(listener_->lexicon().separator());
  out += forms[offset % atomic_count_];
  return out;
}

Form CandidateSpace::form(std::size_t candidate) const {
  const Lexicon& lexicon = listener_->lexicon();
  const auto& forms = lexicon.atomic_forms();
  if (candidate < atomic_count_) return lexicon.form(forms[candidate]);
  const std::size_t offset = candidate - atomic_count_;
  return lexicon.combine(forms[offset / atomic_count_], forms[offset % atomic_count_]);
}

bool CandidateSpace::better(std::size_t lhs, std::size_t rhs, double beta) {
  const double cl = cost(lhs, beta);
  const double cr = cost(rhs, beta);
  if (cl != cr) return cl < cr;
  const double ll = length(lhs);
  const double lr = length(rhs);
  if (ll != lr) return ll < lr;
  return surface(lhs) < surface(rhs);
}

std::size_t CandidateSpace::best_exhaustive(double beta) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < size(); ++c) {
    if (better(c, best, beta)) best = c;
  }
  return best;
}

std::size_t CandidateSpace::best_greedy(double beta) {
  std::size_t first = 0;
  for (std::size_t c = 1; c < atomic_count_; ++c) {
    if (better(c, first, beta)) first = c;
  }
  // u alone plays the role of u followed by the empty string.
  std::size_t best = first;
  for (std::size_t b = 0; b < atomic_count_; ++b) {
    const std::size_t c = pair_index(atomic_count_, first, b);
    if (better(c, best, beta)) best = c;
  }
  return best;
}

Form optimal_label(ConceptIndex concept_index, const ListenerModel& listener, double beta, SearchMode mode) {
  if (!(beta >= 0.0)) throw ValidationError("beta must be non-negative");
  CandidateSpace space(listener, concept_index);
  return space.form(space.best(beta, mode));
}

bool dominates(const CostPoint& a, const CostPoint& b) {
  return a.avg_length <= b.avg_length && a.info_loss <= b.info_loss &&
         (a.avg_length < b.avg_length || a.info_loss < b.info_loss);
}

std::vector<CostPoint> pareto_filter(std::span<const CostPoint> points) {
  std::vector<CostPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const CostPoint& a, const CostPoint& b) {
    return a.avg_length != b.avg_length ? a.avg_length < b.avg_length : a.info_loss < b.info_loss;
  });
  std::vector<CostPoint> front;
  for (const auto& p : sorted) {
    if (front.empty() || p.info_loss < front.back().info_loss) front.push_back(p);
  }
  return front;
}

FrontierResult estimate_frontier(std::span<const ConceptIndex> concepts, const ListenerModel& listener,
                                 const FrontierParams& params, const NeedDistribution& need) {
  validate_beta_grid(params.beta_grid);
  if (concepts.empty()) throw ValidationError("frontier needs at least one concept");
  {
    std::set<ConceptIndex> unique(concepts.begin(), concepts.end());
    if (unique.size() != concepts.size()) throw ValidationError("frontier concept set lists a concept twice");
  }
  for (ConceptIndex c : concepts) {
    if (c >= listener.universe().size()) throw ValidationError("frontier concept out of range");
    if (!need.covers(c)) {
      throw ValidationError("need distribution does not cover concept '" + listener.universe()[c].id + "'");
    }
  }
  const auto& grid = params.beta_grid;

  // choice[c][g]: (form, length, surprisal) chosen for concept c at grid point g.
  struct Choice {
    Form form;
    double length;
    double surprisal;
  };
  std::vector<std::vector<Choice>> choice(concepts.size());
  parallel_for(concepts.size(), params.threads, [&](std::size_t i) {
    CandidateSpace space(listener, concepts[i]);
    std::vector<Choice>& row = choice[i];
    row.reserve(grid.size());
    std::size_t previous = space.size();
    for (double beta : grid) {
      const std::size_t best = space.best(beta, params.search_mode);
      if (best == previous) {
        row.push_back(row.back());
      } else {
        row.push_back({space.form(best), space.length(best), space.surprisal(best)});
      }
      previous = best;
    }
  });

  FrontierResult result;
  result.need = need;
  result.points.reserve(grid.size());
  std::vector<CostPoint> costs;
  costs.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    FrontierPoint point;
    point.beta = grid[g];
    std::vector<EncodingItem> items;
    items.reserve(concepts.size());
    point.items.reserve(concepts.size());
    for (std::size_t i = 0; i < concepts.size(); ++i) {
      const Choice& ch = choice[i][g];
      EncodingItem item;
      item.concept_index = concepts[i];
      item.form = ch.form;
      item.strategy = ch.form.is_atomic() ? Strategy::kReuse : Strategy::kCombination;
      items.push_back(std::move(item));
      point.items.push_back({ch.length, ch.surprisal, need.at(concepts[i])});
    }
    point.encoding = Encoding(std::move(items));
    point.cost = combine_costs(point.items);
    costs.push_back(point.cost);
    result.points.push_back(std::move(point));
  }
  result.pareto_points = pareto_filter(costs);
  return result;
}

EfficiencyLoss efficiency_loss(const CostPoint& cost, const FrontierResult& frontier) {
  if (frontier.points.empty()) throw ValidationError("frontier is empty");
  EfficiencyLoss loss;
  bool first = true;
  for (const auto& point : frontier.points) {
    const double gap = scalarized_cost(cost, point.beta) - scalarized_cost(point.cost, point.beta);
    if (first || gap < loss.raw) {
      loss.raw = gap;
      loss.argmin_beta = point.beta;
      first = false;
    }
  }
  loss.epsilon = std::max(loss.raw, 0.0);
  return loss;
}

EfficiencyLoss efficiency_loss(const Encoding& encoding, const FrontierResult& frontier,
                               const ListenerModel& listener) {
  const auto need_concepts = frontier.need.concepts();
  std::set<ConceptIndex> expected(need_concepts.begin(), need_concepts.end());
  const auto mine = encoding.concepts();
  if (std::set<ConceptIndex>(mine.begin(), mine.end()) != expected || mine.size() != expected.size()) {
    throw ValidationError("encoding and frontier cover different concept sets");
  }
  return efficiency_loss(encoding_cost(encoding, listener, frontier.need), frontier);
}

EfficiencyLoss item_efficiency_loss(double length, double surprisal, ConceptIndex concept_index,
                                    const FrontierResult& frontier) {
  if (frontier.points.empty()) throw ValidationError("frontier is empty");
  const auto& items = frontier.points.front().encoding.items();
  auto it = std::find_if(items.begin(), items.end(), [&](const EncodingItem& item) { return item.concept_index == concept_index; });
  if (it == items.end()) throw ValidationError("concept #" + std::to_string(concept_index) + " is not in the frontier");
  const auto position = static_cast<std::size_t>(it - items.begin());

  EfficiencyLoss loss;
  bool first = true;
  for (const auto& point : frontier.points) {
    const ItemCost& optimum = point.items[position];
    const double gap = (surprisal + point.beta * length) - (optimum.surprisal + point.beta * optimum.length);
    if (first || gap < loss.raw) {
      loss.raw = gap;
      loss.argmin_beta = point.beta;
      first = false;
    }
  }
  loss.epsilon = std::max(loss.raw, 0.0);
  return loss;
}

EfficiencyLoss item_efficiency_loss(const Form& form, ConceptIndex concept_index, const FrontierResult& frontier,
                                    const ListenerModel& listener) {
  return item_efficiency_loss(static_cast<double>(form.length_units), listener.surprisal(form, concept_index), concept_index,
                              frontier);
}

}  // namespace lexeff
