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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexeff/frontier.hpp"
#include "lexeff/lexicon.hpp"
#include "lexeff/semantics.hpp"
#include "lexeff/stats.hpp"

namespace lexeff {

/// Unordered pairs of form surfaces that must not replace one another.
class AntonymSet {
 public:
  void add(std::string_view a, std::string_view b);
  bool contains(std::string_view a, std::string_view b) const;
  std::size_t size() const noexcept { return pairs_.size(); }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

/// Two columns per line, one pair per line. An optional header whose first
/// cell is "surface_a" is skipped.
AntonymSet parse_antonyms(std::istream& in, const std::string& source = "antonyms");
AntonymSet load_antonyms(const std::filesystem::path& path);

struct NearSynonymParams {
  std::size_t k = 5;
  AntonymSet antonyms;
  bool respect_word_class = true;
};

/// The k atomic forms of L whose prototypes are closest to `constituent`'s,
/// skipping antonyms of the constituent and, when `required_classes` is
/// non-empty, forms sharing no word class with it. Ties are broken by
/// surface.
std::vector<std::string> nearest_forms(std::string_view constituent, const ListenerModel& listener,
                                       const NearSynonymParams& params,
                                       const std::set<std::string>& required_classes);

/// Alternatives for an attested label: modifier-synonym + head-synonym
/// combinations (ordered by head position) followed by head synonyms alone.
/// Throws ValidationError when no candidate survives filtering.
std::vector<Form> near_synonym_set(const Form& form, const ListenerModel& listener,
                                   const NearSynonymParams& params);

struct ReplicateSpec {
  std::uint64_t n_replicates = 100000;
  std::uint64_t seed = 0;
};

/// Stream identifiers for the two baseline kinds, mixed into the RNG key.
inline constexpr std::uint64_t kNearSynonymStream = 0x6e6561722d73796eULL;
inline constexpr std::uint64_t kRandomStream = 0x72616e646f6d2d6cULL;

/// Replaces each label by a uniform draw from its set. `sets` is aligned
/// with the encoding's items.
Encoding sample_near_synonym_encoding(const Encoding& encoding,
                                      const std::vector<std::vector<Form>>& sets,
                                      const Universe& universe, const ReplicateSpec& spec,
                                      std::uint64_t replicate_index);
Encoding sample_near_synonym_encoding(const Encoding& encoding, const ListenerModel& listener,
                                      const NearSynonymParams& params, const ReplicateSpec& spec,
                                      std::uint64_t replicate_index);

/// Index in [0, |F| + |F|^2) of the random label for one item; see
/// CandidateSpace for the index layout.
std::uint64_t random_candidate_index(std::size_t atomic_count, std::string_view concept_id,
                                     const ReplicateSpec& spec, std::uint64_t replicate_index);

/// Replaces each label by a uniform draw over atomic forms and ordered
/// two-form combinations.
Encoding sample_random_encoding(const Encoding& encoding, const Lexicon& lexicon,
                                const Universe& universe, const ReplicateSpec& spec,
                                std::uint64_t replicate_index);

enum class BaselineKind { kNearSynonym, kRandom };

struct BaselineSummary {
  BaselineKind kind = BaselineKind::kRandom;
  double mean_loss = 0.0;
  Interval ci;
  std::uint64_t n = 0;
  /// Efficiency loss and cost of each replicate, by replicate index.
  std::vector<double> losses;
  std::vector<CostPoint> costs;
};

struct BaselineOptions {
  NearSynonymParams near_synonyms;
  ReplicateSpec replicates;
  std::size_t bootstrap_resamples = 1000;
  std::size_t threads = 1;
};

/// Generates and scores replicate baselines against the frontier.
BaselineSummary baseline_summary(const Encoding& encoding, const ListenerModel& listener,
                                 const FrontierResult& frontier, const BaselineOptions& options,
                                 BaselineKind kind);

std::string_view to_string(BaselineKind kind);

}  // namespace lexeff
