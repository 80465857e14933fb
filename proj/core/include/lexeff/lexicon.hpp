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
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lexeff {

using ConceptIndex = std::size_t;

/// A lexicalized or emerging sense.
struct Concept {
  std::string id;
  std::string gloss;
  std::vector<double> embedding;
  /// Prior need weight used when senses are relabeled from another language.
  double english_need_weight = 1.0;
};

/// The universe of concepts C. Concepts are addressed by their position.
class Universe {
 public:
  Universe() = default;

  /// Validates ids, dimensions and norms. Throws ValidationError.
  explicit Universe(std::vector<Concept> concepts);

  std::size_t size() const noexcept { return concepts_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  bool empty() const noexcept { return concepts_.empty(); }

  const Concept& operator[](ConceptIndex i) const { return concepts_[i]; }
  std::span<const Concept> concepts() const noexcept { return concepts_; }

  std::optional<ConceptIndex> find(std::string_view id) const;
  /// Throws ValidationError for an unknown id.
  ConceptIndex index_of(std::string_view id) const;

 private:
  std::vector<Concept> concepts_;
  std::unordered_map<std::string, ConceptIndex> by_id_;
  std::size_t dimension_ = 0;
};

enum class HeadPosition { kFinal, kInitial };
enum class LengthMode { kOrthographic, kProvided };
enum class Strategy { kReuse, kCombination };

/// Number of Unicode code points in a UTF-8 string.
std::size_t utf8_length(std::string_view text);

/// A word form. Atomic forms have one constituent; combinations have two.
struct Form {
  std::string surface;
  std::vector<std::string> constituents;
  int length_units = 1;
  std::set<std::string> word_classes;

  bool is_atomic() const noexcept { return constituents.size() == 1; }

  friend bool operator==(const Form&, const Form&) = default;
};

struct LexiconEntry {
  Form form;
  ConceptIndex concept_index = 0;
  double form_frequency = 0.0;
  double sense_frequency = 0.0;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

struct LexiconOptions {
  char separator = ' ';
  HeadPosition head_position = HeadPosition::kFinal;
  LengthMode length_mode = LengthMode::kOrthographic;
};

/// The existing lexicon L: a set of form-concept pairs with frequencies.
///
/// A surface may carry several senses. Form-level attributes (form frequency,
/// length, constituents) must agree across the rows of one surface; word
/// classes are the union over rows.
class Lexicon {
 public:
  Lexicon() = default;
  /// Throws ValidationError on duplicate pairs, negative frequencies, or
  /// inconsistent form attributes. Concept indices must be valid in
  /// `universe`.
  Lexicon(std::vector<LexiconEntry> entries, const Universe& universe, LexiconOptions options);

  std::span<const LexiconEntry> entries() const noexcept { return entries_; }
  const LexiconOptions& options() const noexcept { return options_; }
  char separator() const noexcept { return options_.separator; }
  HeadPosition head_position() const noexcept { return options_.head_position; }
  LengthMode length_mode() const noexcept { return options_.length_mode; }

  bool contains(std::string_view surface) const;
  /// Entry indices of the senses of `surface`, in input order. Empty when
  /// the surface is not in L.
  std::span<const std::size_t> senses_of(std::string_view surface) const;

  /// Distinct single-constituent surfaces in L, sorted. This is the set F of
  /// atomic forms that candidate labels are built from.
  const std::vector<std::string>& atomic_forms() const noexcept { return atomic_forms_; }

  /// Canonical form (with merged word classes) of a surface in L. Throws
  /// ValidationError when absent.
  const Form& form(std::string_view surface) const;
  double form_frequency(std::string_view surface) const;

  /// Length of a label in the lexicon's length mode. Atomic forms take their
  /// length from L; synthesized combinations are `first + separator + second`
  /// in orthographic mode and the sum of constituent lengths in provided mode.
  Form combine(const Form& first, const Form& second) const;
  Form combine(std::string_view first, std::string_view second) const;

  /// (modifier, head) of a form according to head position. Atomic forms have
  /// an empty modifier.
  std::pair<std::string, std::string> split_head(const Form& form) const;

 private:
  std::vector<LexiconEntry> entries_;
  LexiconOptions options_;
  std::unordered_map<std::string, std::vector<std::size_t>> senses_;
  std::unordered_map<std::string, Form> forms_;
  std::vector<std::string> atomic_forms_;
};

struct EncodingItem {
  ConceptIndex concept_index = 0;
  Form form;
  Strategy strategy = Strategy::kReuse;
  /// Optional frequencies of the new pair; absent values fall back to L.
  std::optional<double> form_frequency;
  std::optional<double> sense_frequency;
  double joint_weight = 0.0;
};

/// A labeling of emerging concepts: exactly one form per concept.
class Encoding {
 public:
  Encoding() = default;
  /// Throws ValidationError when a concept repeats.
  explicit Encoding(std::vector<EncodingItem> items);

  std::span<const EncodingItem> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const EncodingItem& operator[](std::size_t i) const { return items_[i]; }

  std::vector<ConceptIndex> concepts() const;

  /// Subset of items with the given strategy, in input order.
  Encoding filter(Strategy strategy) const;

  /// Copy with each item's form replaced; `forms` is aligned with items.
  Encoding relabel(std::span<const Form> forms) const;

 private:
  std::vector<EncodingItem> items_;
};

/// Checks that every constituent of every item resolves in the lexicon and
/// that reuse items name an existing surface. Returns one message per
/// problem, each prefixed with the item's concept id.
std::vector<std::string> check_encoding(const Encoding& encoding, const Lexicon& lexicon,
                                        const Universe& universe);

enum class NeedMode { kCorpus, kRelabeled };

struct NeedProductionModel {
  NeedMode mode = NeedMode::kCorpus;
  bool smoothing = true;
};

/// p(c, w | L') restricted to the encoding's pairs and renormalized.
/// Returned weights are aligned with encoding items.
std::vector<double> joint_distribution(const Encoding& encoding, const Lexicon& lexicon,
                                       const Universe& universe, const NeedProductionModel& model);

/// Need probabilities of the emerging concepts, held fixed while costing
/// alternative encodings of the same concept set.
class NeedDistribution {
 public:
  NeedDistribution() = default;
  NeedDistribution(std::vector<ConceptIndex> concepts, std::vector<double> probabilities);

  std::span<const ConceptIndex> concepts() const noexcept { return concepts_; }
  std::span<const double> probabilities() const noexcept { return probabilities_; }
  std::size_t size() const noexcept { return concepts_.size(); }

  bool covers(ConceptIndex concept_index) const;
  /// Throws ValidationError when the concept is not covered.
  double at(ConceptIndex concept_index) const;

 private:
  std::vector<ConceptIndex> concepts_;
  std::vector<double> probabilities_;
  std::unordered_map<ConceptIndex, std::size_t> position_;
};

NeedDistribution need_marginal(const Encoding& encoding, const Lexicon& lexicon,
                               const Universe& universe, const NeedProductionModel& model);

/// Rounds half-up to an integer count and adds one.
double add_one(double frequency);

}  // namespace lexeff
