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

#include <vector>

#include "lexeff/lexicon.hpp"
#include "lexeff/semantics.hpp"

namespace lexeff {

/// Expected length and expected information loss (bits) of an encoding.
struct CostPoint {
  double avg_length = 0.0;
  double info_loss = 0.0;

  friend bool operator==(const CostPoint&, const CostPoint&) = default;
};

struct ItemCost {
  double length = 0.0;
  double surprisal = 0.0;
  double weight = 0.0;
};

double surprisal(const Form& form, ConceptIndex concept_index, const Lexicon& lexicon,
                 const Universe& universe, const ListenerParams& params);

/// Per-item length, surprisal and weight under the given need/production
/// model.
std::vector<ItemCost> item_costs(const Encoding& encoding, const Lexicon& lexicon,
                                 const Universe& universe, const NeedProductionModel& model,
                                 const ListenerParams& params);
/// Per-item costs with a fixed need distribution covering the encoding's
/// concepts.
std::vector<ItemCost> item_costs(const Encoding& encoding, const ListenerModel& listener,
                                 const NeedDistribution& need);

/// Weighted sum of item costs, reduced in item order.
CostPoint combine_costs(const std::vector<ItemCost>& items);

CostPoint encoding_cost(const Encoding& encoding, const Lexicon& lexicon, const Universe& universe,
                        const NeedProductionModel& model, const ListenerParams& params);
CostPoint encoding_cost(const Encoding& encoding, const ListenerModel& listener,
                        const NeedDistribution& need);

inline double scalarized_cost(const CostPoint& cost, double beta) {
  return cost.info_loss + beta * cost.avg_length;
}
double scalarized_cost(const Encoding& encoding, const Lexicon& lexicon, const Universe& universe,
                       const NeedProductionModel& model, const ListenerParams& params,
                       double beta);

/// Item-level objective: surprisal + beta * length.
double item_cost(const Form& form, ConceptIndex concept_index, const Lexicon& lexicon,
                 const Universe& universe, const ListenerParams& params, double beta);

}  // namespace lexeff
