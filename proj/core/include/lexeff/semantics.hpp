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

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexeff/lexicon.hpp"

namespace lexeff {

/// 1 - cos(a, b). Throws ValidationError for zero-norm or mismatched inputs.
double cosine_distance(std::span<const double> a, std::span<const double> b);

/// Category prototype of a form.
struct Prototype {
  std::string form_surface;
  std::vector<double> vector;
};

struct ListenerParams {
  double gamma = 10.0;
};

/// Smoothed p(c | w, L) over the senses of an L surface, aligned with
/// Lexicon::senses_of(surface).
std::vector<double> sense_weights(std::string_view surface, const Lexicon& lexicon);

/// Forms in L average their sense embeddings by smoothed relative sense
/// frequency. Other two-constituent forms sum their constituents'
/// prototypes. Throws ValidationError when the form does not resolve.
Prototype prototype(const Form& form, const Lexicon& lexicon, const Universe& universe);

/// The listener's reconstruction: p(c) proportional to exp(-gamma d(c, q_w))
/// over every concept in the universe.
std::vector<double> listener_distribution(const Form& form, const Lexicon& lexicon,
                                          const Universe& universe, const ListenerParams& params);

/// Precomputed listener state for one (lexicon, universe, gamma).
///
/// Prototypes of every surface in L are built at construction; combination
/// prototypes are formed on demand. The model keeps references to the
/// lexicon and universe, which must outlive it. All member functions are
/// const and safe to call concurrently.
class ListenerModel {
 public:
  ListenerModel(const Lexicon& lexicon, const Universe& universe, ListenerParams params);

  const Lexicon& lexicon() const noexcept { return *lexicon_; }
  const Universe& universe() const noexcept { return *universe_; }
  const ListenerParams& params() const noexcept { return params_; }

  /// Prototype of a surface in L. Throws ValidationError when absent.
  std::span<const double> lexicon_prototype(std::string_view surface) const;
  /// Prototype of the synthesized combination (first, second).
  std::vector<double> combination_prototype(std::string_view first, std::string_view second) const;
  std::vector<double> prototype(const Form& form) const;

  /// Cosine distance from each universe concept to `prototype`.
  std::vector<double> distances(std::span<const double> prototype) const;
  std::vector<double> distribution(std::span<const double> prototype) const;
  /// -log2 of the listener probability of `concept`, in bits.
  double surprisal(std::span<const double> prototype, ConceptIndex concept_index) const;
  double surprisal(const Form& form, ConceptIndex concept_index) const;

 private:
  const Lexicon* lexicon_;
  const Universe* universe_;
  ListenerParams params_;
  std::unordered_map<std::string, std::vector<double>> prototypes_;
  // Row-major unit-normalized embeddings.
  std::vector<double> unit_embeddings_;
};

/// Softmax of -gamma * distances with max-shift. Exposed for testing.
std::vector<double> softmax_of_distances(std::span<const double> distances, double gamma);

}  // namespace lexeff
