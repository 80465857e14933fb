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

#include "lexeff/costs.hpp"

#include "lexeff/error.hpp"

namespace lexeff {

double surprisal(const Form& form, ConceptIndex concept_index, const Lexicon& lexicon, const Universe& universe,
                 const ListenerParams& params) {
  ListenerModel model(lexicon, universe, params);
  return model.surprisal(form, concept_index);
}

namespace {

std::vector<ItemCost> cost_items(const Encoding& encoding, const ListenerModel& listener,
                                 const std::vector<double>& weights) {
  std::vector<ItemCost> out;
  out.reserve(encoding.size());
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    const auto& item = encoding[i];
    out.push_back({static_cast<double>(item.form.length_units), listener.surprisal(item.form, item.concept_index),
                   weights[i]});
  }
  return out;
}

}  // namespace

std::vector<ItemCost> item_costs(const Encoding& encoding, const Lexicon& lexicon, const Universe& universe,
                                 const NeedProductionModel& model, const ListenerParams& params) {
  ListenerModel listener(lexicon, universe, params);
  return cost_items(encoding, listener, joint_distribution(encoding, lexicon, universe, model));
}

std::vector<ItemCost> item_costs(const Encoding& encoding, const ListenerModel& listener,
                                 const NeedDistribution& need) {
  std::vector<double> weights;
  weights.reserve(encoding.size());
  for (const auto& item : encoding.items()) weights.push_back(need.at(item.concept_index));
  return cost_items(encoding, listener, weights);
}

CostPoint combine_costs(const std::vector<ItemCost>& items) {
  CostPoint cost;
  for (const auto& item : items) {
    cost.avg_length += item.weight * item.length;
    cost.info_loss += item.weight * item.surprisal;
  }
  return cost;
}

CostPoint encoding_cost(const Encoding& encoding, const Lexicon& lexicon, const Universe& universe,
                        const NeedProductionModel& model, const ListenerParams& params) {
  return combine_costs(item_costs(encoding, lexicon, universe, model, params));
}

CostPoint encoding_cost(const Encoding& encoding, const ListenerModel& listener, const NeedDistribution& need) {
  return combine_costs(item_costs(encoding, listener, need));
}

double scalarized_cost(const Encoding& encoding, const Lexicon& lexicon, const Universe& universe,
                       const NeedProductionModel& model, const ListenerParams& params, double beta) {
  if (!(beta >= 0.0)) throw ValidationError("beta must be non-negative");
  return scalarized_cost(encoding_cost(encoding, lexicon, universe, model, params), beta);
}

double item_cost(const Form& form, ConceptIndex concept_index, const Lexicon& lexicon, const Universe& universe,
                 const ListenerParams& params, double beta) {
  return surprisal(form, concept_index, lexicon, universe, params) + beta * static_cast<double>(form.length_units);
}

}  // namespace lexeff
