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

#include "lexeff/baselines.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "lexeff/error.hpp"
#include "lexeff/io.hpp"
#include "lexeff/parallel.hpp"
#include "lexeff/rng.hpp"

namespace lexeff {

void AntonymSet::add(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  pairs_.emplace(std::string(a), std::string(b));
}

bool AntonymSet::contains(std::string_view a, std::string_view b) const {
  if (b < a) std::swap(a, b);
  return pairs_.contains({std::string(a), std::string(b)});
}

AntonymSet parse_antonyms(std::istream& in, const std::string& source) {
  AntonymSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    auto cells = split(line, '\t');
    if (cells.size() < 2) throw ParseError(source, line_no, "expected two tab-separated surfaces");
    auto a = trim(cells[0]);
    auto b = trim(cells[1]);
    if (a == "surface_a") continue;
    if (a.empty() || b.empty()) throw ParseError(source, line_no, "empty surface");
    set.add(a, b);
  }
  return set;
}

AntonymSet load_antonyms(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_antonyms(in, path.string());
}

std::vector<std::string> nearest_forms(std::string_view constituent, const ListenerModel& listener,
                                       const NearSynonymParams& params,
                                       const std::set<std::string>& required_classes) {
  const Lexicon& lexicon = listener.lexicon();
  const auto target = listener.lexicon_prototype(constituent);
  std::vector<std::pair<double, std::string>> ranked;
  for (const auto& x : lexicon.atomic_forms()) {
    if (params.antonyms.contains(constituent, x)) continue;
    if (!required_classes.empty()) {
      const auto& classes = lexicon.form(x).word_classes;
      bool overlap = std::any_of(classes.begin(), classes.end(),
                                 [&](const std::string& c) { return required_classes.contains(c); });
      if (!overlap) continue;
    }
    ranked.emplace_back(cosine_distance(target, listener.lexicon_prototype(x)), x);
  }
  const std::size_t keep = std::min(params.k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep), ranked.end());
  std::vector<std::string> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.push_back(std::move(ranked[i].second));
  return out;
}

std::vector<Form> near_synonym_set(const Form& form, const ListenerModel& listener, const NearSynonymParams& params) {
  if (params.k == 0) throw ValidationError("near-synonym k must be at least 1");
  const Lexicon& lexicon = listener.lexicon();
  const auto [modifier, head] = lexicon.split_head(form);
  if (!lexicon.contains(head)) throw ValidationError("head '" + head + "' of '" + form.surface + "' is not in the lexicon");
  if (!modifier.empty() && !lexicon.contains(modifier)) {
    throw ValidationError("modifier '" + modifier + "' of '" + form.surface + "' is not in the lexicon");
  }

  std::set<std::string> head_classes;
  if (params.respect_word_class) head_classes = lexicon.form(head).word_classes;
  const auto head_synonyms = nearest_forms(head, listener, params, head_classes);
  const auto modifier_synonyms =
      modifier.empty() ? std::vector<std::string>{} : nearest_forms(modifier, listener, params, {});

  std::vector<Form> out;
  std::unordered_set<std::string> seen;
  auto add = [&](Form f) {
    if (seen.insert(f.surface).second) out.push_back(std::move(f));
  };
  for (const auto& m : modifier_synonyms) {
    for (const auto& h : head_synonyms) {
      add(lexicon.head_position() == HeadPosition::kFinal ? lexicon.combine(m, h) : lexicon.combine(h, m));
    }
  }
  for (const auto& h : head_synonyms) add(lexicon.form(h));
  if (out.empty()) throw ValidationError("no near-synonym candidates for '" + form.surface + "'");
  return out;
}

namespace {

std::uint64_t item_stream(std::uint64_t kind, std::string_view concept_id) {
  return mix64(kind ^ stable_hash(concept_id));
}

}  // namespace

Encoding sample_near_synonym_encoding(const Encoding& encoding, const std::vector<std::vector<Form>>& sets,
                                      const Universe& universe, const ReplicateSpec& spec,
                                      std::uint64_t replicate_index) {
  if (sets.size() != encoding.size()) throw ValidationError("near-synonym sets do not match the encoding");
  std::vector<Form> forms;
  forms.reserve(encoding.size());
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    if (sets[i].empty()) throw ValidationError("empty near-synonym set for '" + encoding[i].form.surface + "'");
    CounterRng rng(spec.seed, item_stream(kNearSynonymStream, universe[encoding[i].concept_index].id), replicate_index);
    forms.push_back(sets[i][uniform_index(rng, sets[i].size())]);
  }
  return encoding.relabel(forms);
}

Encoding sample_near_synonym_encoding(const Encoding& encoding, const ListenerModel& listener,
                                      const NearSynonymParams& params, const ReplicateSpec& spec,
                                      std::uint64_t replicate_index) {
  std::vector<std::vector<Form>> sets;
  sets.reserve(encoding.size());
  for (const auto& item : encoding.items()) sets.push_back(near_synonym_set(item.form, listener, params));
  return sample_near_synonym_encoding(encoding, sets, listener.universe(), spec, replicate_index);
}

std::uint64_t random_candidate_index(std::size_t atomic_count, std::string_view concept_id, const ReplicateSpec& spec,
                                     std::uint64_t replicate_index) {
  const std::uint64_t n = atomic_count + static_cast<std::uint64_t>(atomic_count) * atomic_count;
  CounterRng rng(spec.seed, item_stream(kRandomStream, concept_id), replicate_index);
  return uniform_index(rng, n);
}

namespace {

Form candidate_form(const Lexicon& lexicon, std::uint64_t index) {
  const auto& forms = lexicon.atomic_forms();
  const std::size_t f = forms.size();
  if (index < f) return lexicon.form(forms[index]);
  const std::uint64_t offset = index - f;
  return lexicon.combine(forms[offset / f], forms[offset % f]);
}

}  // namespace

Encoding sample_random_encoding(const Encoding& encoding, const Lexicon& lexicon, const Universe& universe,
                                const ReplicateSpec& spec, std::uint64_t replicate_index) {
  const std::size_t f = lexicon.atomic_forms().size();
  if (f == 0) throw ValidationError("lexicon has no atomic forms");
  std::vector<Form> forms;
  forms.reserve(encoding.size());
  for (const auto& item : encoding.items()) {
    forms.push_back(candidate_form(lexicon, random_candidate_index(f, universe[item.concept_index].id, spec, replicate_index)));
  }
  return encoding.relabel(forms);
}

std::string_view to_string(BaselineKind kind) { return kind == BaselineKind::kNearSynonym ? "near-synonym" : "random"; }

BaselineSummary baseline_summary(const Encoding& encoding, const ListenerModel& listener,
                                 const FrontierResult& frontier, const BaselineOptions& options, BaselineKind kind) {
  const auto& spec = options.replicates;
  if (spec.n_replicates == 0) throw ValidationError("at least one replicate is required");
  const Universe& universe = listener.universe();
  const Lexicon& lexicon = listener.lexicon();

  // Concept-set check against the frontier, and per-item need weights.
  efficiency_loss(encoding, frontier, listener);
  std::vector<double> need;
  for (const auto& item : encoding.items()) need.push_back(frontier.need.at(item.concept_index));

  // Near-synonym sets are small, so their item costs are tabulated once.
  std::vector<std::vector<Form>> sets;
  std::vector<std::vector<ItemCost>> set_costs;
  if (kind == BaselineKind::kNearSynonym) {
    for (const auto& item : encoding.items()) {
      sets.push_back(near_synonym_set(item.form, listener, options.near_synonyms));
      std::vector<ItemCost> costs;
      for (const auto& f : sets.back()) {
        costs.push_back({static_cast<double>(f.length_units), listener.surprisal(f, item.concept_index), 0.0});
      }
      set_costs.push_back(std::move(costs));
    }
  }
  const std::size_t atomic_count = lexicon.atomic_forms().size();
  if (atomic_count == 0) throw ValidationError("lexicon has no atomic forms");

  BaselineSummary summary;
  summary.kind = kind;
  summary.n = spec.n_replicates;
  summary.losses.resize(spec.n_replicates);
  summary.costs.resize(spec.n_replicates);
  parallel_for(spec.n_replicates, options.threads, [&](std::size_t r) {
    std::vector<ItemCost> items(encoding.size());
    for (std::size_t i = 0; i < encoding.size(); ++i) {
      const auto& item = encoding[i];
      const std::string& id = universe[item.concept_index].id;
      if (kind == BaselineKind::kNearSynonym) {
        CounterRng rng(spec.seed, item_stream(kNearSynonymStream, id), r);
        items[i] = set_costs[i][uniform_index(rng, sets[i].size())];
      } else {
        const Form f = candidate_form(lexicon, random_candidate_index(atomic_count, id, spec, r));
        items[i] = {static_cast<double>(f.length_units), listener.surprisal(f, item.concept_index), 0.0};
      }
      items[i].weight = need[i];
    }
    const CostPoint cost = combine_costs(items);
    summary.costs[r] = cost;
    summary.losses[r] = efficiency_loss(cost, frontier).epsilon;
  });

  summary.mean_loss = mean(summary.losses);
  summary.ci = bootstrap_ci(summary.losses, Statistic::kMean, options.bootstrap_resamples,
                            mix64(spec.seed ^ (kind == BaselineKind::kNearSynonym ? kNearSynonymStream : kRandomStream)));
  return summary;
}

}  // namespace lexeff
