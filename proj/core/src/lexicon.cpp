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

#include "lexeff/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lexeff/error.hpp"

namespace lexeff {

Universe::Universe(std::vector<Concept> concepts) : concepts_(std::move(concepts)) {
  for (ConceptIndex i = 0; i < concepts_.size(); ++i) {
    const Concept& c = concepts_[i];
    if (c.id.empty()) throw ValidationError("concept at position " + std::to_string(i) + " has an empty id");
    if (!by_id_.emplace(c.id, i).second) throw ValidationError("duplicate concept id '" + c.id + "'");
    if (c.embedding.empty()) throw ValidationError("concept '" + c.id + "' has an empty embedding");
    if (i == 0) dimension_ = c.embedding.size();
    if (c.embedding.size() != dimension_) {
      throw ValidationError("concept '" + c.id + "' has dimension " + std::to_string(c.embedding.size()) +
                            ", expected " + std::to_string(dimension_));
    }
    double norm2 = 0.0;
    for (double x : c.embedding) {
      if (!std::isfinite(x)) throw ValidationError("concept '" + c.id + "' has a non-finite embedding value");
      norm2 += x * x;
    }
    if (norm2 == 0.0) throw ValidationError("concept '" + c.id + "' has a zero-norm embedding");
    if (!(c.english_need_weight >= 0.0) || !std::isfinite(c.english_need_weight)) {
      throw ValidationError("concept '" + c.id + "' has an invalid need weight");
    }
  }
}

std::optional<ConceptIndex> Universe::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

ConceptIndex Universe::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw ValidationError("unknown concept id '" + std::string(id) + "'");
}

std::size_t utf8_length(std::string_view text) {
  return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0u) != 0x80u;
  }));
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries, const Universe& universe, LexiconOptions options)
    : entries_(std::move(entries)), options_(options) {
  std::set<std::pair<std::string, ConceptIndex>> pairs;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const LexiconEntry& e = entries_[i];
    const Form& f = e.form;
    if (f.surface.empty()) throw ValidationError("lexicon entry " + std::to_string(i) + " has an empty surface");
    if (e.concept_index >= universe.size()) {
      throw ValidationError("lexicon entry '" + f.surface + "' references an unknown concept");
    }
    const std::string& cid = universe[e.concept_index].id;
    if (f.constituents.empty() || f.constituents.size() > 2) {
      throw ValidationError("form '" + f.surface + "' must have one or two constituents");
    }
    if (f.length_units < 1) throw ValidationError("form '" + f.surface + "' has length < 1");
    if (!(e.form_frequency >= 0.0) || !(e.sense_frequency >= 0.0) || !std::isfinite(e.form_frequency) ||
        !std::isfinite(e.sense_frequency)) {
      throw ValidationError("negative or invalid frequency for ('" + f.surface + "', '" + cid + "')");
    }
    if (!pairs.emplace(f.surface, e.concept_index).second) {
      throw ValidationError("duplicate lexicon pair ('" + f.surface + "', '" + cid + "')");
    }
    auto [it, inserted] = forms_.try_emplace(f.surface, f);
    if (!inserted) {
      Form& canonical = it->second;
      if (canonical.constituents != f.constituents || canonical.length_units != f.length_units) {
        throw ValidationError("inconsistent constituents or length for form '" + f.surface + "'");
      }
      if (entries_[senses_[f.surface].front()].form_frequency != e.form_frequency) {
        throw ValidationError("inconsistent form_freq for form '" + f.surface + "'");
      }
      canonical.word_classes.insert(f.word_classes.begin(), f.word_classes.end());
    }
    senses_[f.surface].push_back(i);
  }
  for (const auto& [surface, form] : forms_) {
    if (form.is_atomic()) atomic_forms_.push_back(surface);
  }
  std::sort(atomic_forms_.begin(), atomic_forms_.end());
}

bool Lexicon::contains(std::string_view surface) const { return forms_.contains(std::string(surface)); }

std::span<const std::size_t> Lexicon::senses_of(std::string_view surface) const {
  auto it = senses_.find(std::string(surface));
  if (it == senses_.end()) return {};
  return it->second;
}

const Form& Lexicon::form(std::string_view surface) const {
  auto it = forms_.find(std::string(surface));
  if (it == forms_.end()) throw ValidationError("form '" + std::string(surface) + "' is not in the lexicon");
  return it->second;
}

double Lexicon::form_frequency(std::string_view surface) const {
  auto senses = senses_of(surface);
  if (senses.empty()) throw ValidationError("form '" + std::string(surface) + "' is not in the lexicon");
  return entries_[senses.front()].form_frequency;
}

Form Lexicon::combine(const Form& first, const Form& second) const {
  Form out;
  out.surface.reserve(first.surface.size() + 1 + second.surface.size());
  out.surface.append(first.surface).push_back(options_.separator);
  out.surface.append(second.surface);
  out.constituents = {first.surface, second.surface};
  out.length_units = options_.length_mode == LengthMode::kOrthographic
                         ? static_cast<int>(utf8_length(out.surface))
                         : first.length_units + second.length_units;
  out.word_classes = options_.head_position == HeadPosition::kFinal ? second.word_classes : first.word_classes;
  return out;
}

Form Lexicon::combine(std::string_view first, std::string_view second) const {
  return combine(form(first), form(second));
}

std::pair<std::string, std::string> Lexicon::split_head(const Form& f) const {
  if (f.constituents.size() < 2) return {std::string(), f.constituents.empty() ? f.surface : f.constituents[0]};
  if (options_.head_position == HeadPosition::kFinal) return {f.constituents[0], f.constituents[1]};
  return {f.constituents[1], f.constituents[0]};
}

Encoding::Encoding(std::vector<EncodingItem> items) : items_(std::move(items)) {
  std::set<ConceptIndex> seen;
  for (const auto& item : items_) {
    if (!seen.insert(item.concept_index).second) {
      throw ValidationError("encoding labels concept #" + std::to_string(item.concept_index) +
                            " more than once; one label per concept is required");
    }
    if (item.form.constituents.empty() || item.form.constituents.size() > 2) {
      throw ValidationError("encoding form '" + item.form.surface + "' must have one or two constituents");
    }
  }
}

std::vector<ConceptIndex> Encoding::concepts() const {
  std::vector<ConceptIndex> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.concept_index);
  return out;
}

Encoding Encoding::filter(Strategy strategy) const {
  std::vector<EncodingItem> out;
  std::copy_if(items_.begin(), items_.end(), std::back_inserter(out),
               [&](const EncodingItem& item) { return item.strategy == strategy; });
  return Encoding(std::move(out));
}

Encoding Encoding::relabel(std::span<const Form> forms) const {
  if (forms.size() != items_.size()) throw ValidationError("relabel: form count does not match items");
  std::vector<EncodingItem> out;
  out.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) {
    EncodingItem item;
    item.concept_index = items_[i].concept_index;
    item.form = forms[i];
    item.strategy = forms[i].is_atomic() ? Strategy::kReuse : Strategy::kCombination;
    out.push_back(std::move(item));
  }
  return Encoding(std::move(out));
}

std::vector<std::string> check_encoding(const Encoding& encoding, const Lexicon& lexicon,
                                        const Universe& universe) {
  std::vector<std::string> problems;
  for (const auto& item : encoding.items()) {
    const std::string& id = item.concept_index < universe.size() ? universe[item.concept_index].id : "?";
    const Form& f = item.form;
    if (item.strategy == Strategy::kReuse && !lexicon.contains(f.surface)) {
      problems.push_back(id + ": reused form '" + f.surface + "' is not in the lexicon");
      continue;
    }
    if (item.strategy == Strategy::kCombination && f.constituents.size() != 2) {
      problems.push_back(id + ": combination '" + f.surface + "' must have exactly two constituents");
      continue;
    }
    for (const auto& constituent : f.constituents) {
      if (!lexicon.contains(constituent)) {
        problems.push_back(id + ": constituent '" + constituent + "' of '" + f.surface +
                           "' is not in the lexicon");
      }
    }
  }
  return problems;
}

double add_one(double frequency) { return std::floor(frequency + 0.5) + 1.0; }

namespace {

struct Sense {
  ConceptIndex concept_index;
  double frequency;
};

// Senses of a surface in L' = L plus the encoding's items.
std::vector<Sense> senses_in_expanded(std::string_view surface, const Encoding& encoding,
                                      const Lexicon& lexicon) {
  std::vector<Sense> senses;
  for (std::size_t e : lexicon.senses_of(surface)) {
    const auto& entry = lexicon.entries()[e];
    senses.push_back({entry.concept_index, entry.sense_frequency});
  }
  for (const auto& item : encoding.items()) {
    if (item.form.surface != surface) continue;
    bool present = std::any_of(senses.begin(), senses.end(),
                               [&](const Sense& s) { return s.concept_index == item.concept_index; });
    if (!present) senses.push_back({item.concept_index, item.sense_frequency.value_or(0.0)});
  }
  return senses;
}

}  // namespace

std::vector<double> joint_distribution(const Encoding& encoding, const Lexicon& lexicon,
                                       const Universe& universe, const NeedProductionModel& model) {
  std::vector<double> weights;
  weights.reserve(encoding.size());
  for (const auto& item : encoding.items()) {
    const Form& w = item.form;
    double form_frequency = item.form_frequency.value_or(
        lexicon.contains(w.surface) ? lexicon.form_frequency(w.surface) : 0.0);
    const std::vector<Sense> senses = senses_in_expanded(w.surface, encoding, lexicon);

    // p(c | w, L') before smoothing.
    auto score = [&](const Sense& s) {
      if (model.mode == NeedMode::kRelabeled) return universe[s.concept_index].english_need_weight;
      return w.is_atomic() ? s.frequency : 1.0;
    };
    double total = 0.0;
    double mine = 0.0;
    for (const Sense& s : senses) {
      total += score(s);
      if (s.concept_index == item.concept_index) mine = score(s);
    }
    double conditional = total > 0.0 ? mine / total : 1.0 / static_cast<double>(senses.size());

    double pair_count = form_frequency * conditional;
    weights.push_back(model.smoothing ? add_one(pair_count) : pair_count);
  }
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (encoding.empty()) return weights;
  if (!(sum > 0.0)) throw ValidationError("all joint weights are zero; enable smoothing or supply frequencies");
  for (double& w : weights) w /= sum;
  return weights;
}

NeedDistribution::NeedDistribution(std::vector<ConceptIndex> concepts, std::vector<double> probabilities)
    : concepts_(std::move(concepts)), probabilities_(std::move(probabilities)) {
  if (concepts_.size() != probabilities_.size()) {
    throw ValidationError("need distribution: concept and probability counts differ");
  }
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (!position_.emplace(concepts_[i], i).second) {
      throw ValidationError("need distribution lists a concept twice");
    }
  }
}

bool NeedDistribution::covers(ConceptIndex concept_index) const { return position_.contains(concept_index); }

double NeedDistribution::at(ConceptIndex concept_index) const {
  auto it = position_.find(concept_index);
  if (it == position_.end()) throw ValidationError("need distribution does not cover concept #" + std::to_string(concept_index));
  return probabilities_[it->second];
}

NeedDistribution need_marginal(const Encoding& encoding, const Lexicon& lexicon, const Universe& universe,
                               const NeedProductionModel& model) {
  const std::vector<double> joint = joint_distribution(encoding, lexicon, universe, model);
  return NeedDistribution(encoding.concepts(), joint);
}

}  // namespace lexeff
