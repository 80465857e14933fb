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

#include "lexeff/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lexeff/error.hpp"

namespace lexeff {

namespace {

// -log2(1e-300): the surprisal ceiling for underflowed probabilities.
const double kMaxSurprisal = -std::log2(1e-300);

double norm(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

double cosine_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("cosine_distance: dimension mismatch");
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) throw ValidationError("cosine_distance: zero-norm vector");
  const double cosine = std::inner_product(a.begin(), a.end(), b.begin(), 0.0) / (na * nb);
  return std::clamp(1.0 - cosine, 0.0, 2.0);
}

std::vector<double> sense_weights(std::string_view surface, const Lexicon& lexicon) {
  auto senses = lexicon.senses_of(surface);
  std::vector<double> weights;
  weights.reserve(senses.size());
  double total = 0.0;
  for (std::size_t e : senses) {
    weights.push_back(add_one(lexicon.entries()[e].sense_frequency));
    total += weights.back();
  }
  for (double& w : weights) w /= total;
  return weights;
}

namespace {

std::vector<double> average_senses(std::string_view surface, const Lexicon& lexicon, const Universe& universe) {
  std::vector<double> q(universe.dimension(), 0.0);
  auto senses = lexicon.senses_of(surface);
  const std::vector<double> weights = sense_weights(surface, lexicon);
  for (std::size_t s = 0; s < senses.size(); ++s) {
    const auto& embedding = universe[lexicon.entries()[senses[s]].concept_index].embedding;
    for (std::size_t d = 0; d < q.size(); ++d) q[d] += weights[s] * embedding[d];
  }
  return q;
}

}  // namespace

Prototype prototype(const Form& form, const Lexicon& lexicon, const Universe& universe) {
  Prototype out{form.surface, {}};
  if (lexicon.contains(form.surface)) {
    out.vector = average_senses(form.surface, lexicon, universe);
    return out;
  }
  if (form.constituents.size() != 2) {
    throw ValidationError("form '" + form.surface + "' is not in the lexicon");
  }
  out.vector.assign(universe.dimension(), 0.0);
  for (const auto& constituent : form.constituents) {
    if (!lexicon.contains(constituent)) {
      throw ValidationError("constituent '" + constituent + "' of '" + form.surface + "' is not in the lexicon");
    }
    const auto part = average_senses(constituent, lexicon, universe);
    for (std::size_t d = 0; d < part.size(); ++d) out.vector[d] += part[d];
  }
  return out;
}

std::vector<double> softmax_of_distances(std::span<const double> distances, double gamma) {
  std::vector<double> p(distances.size());
  if (distances.empty()) return p;
  const double min_distance = *std::min_element(distances.begin(), distances.end());
  double total = 0.0;
  for (std::size_t i = 0; i < distances.size(); ++i) {
    p[i] = std::exp(-gamma * (distances[i] - min_distance));
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

std::vector<double> listener_distribution(const Form& form, const Lexicon& lexicon, const Universe& universe,
                                          const ListenerParams& params) {
  ListenerModel model(lexicon, universe, params);
  return model.distribution(model.prototype(form));
}

ListenerModel::ListenerModel(const Lexicon& lexicon, const Universe& universe, ListenerParams params)
    : lexicon_(&lexicon), universe_(&universe), params_(params) {
  if (!(params_.gamma >= 0.0) || !std::isfinite(params_.gamma)) {
    throw ValidationError("gamma must be a finite non-negative number");
  }
  for (const auto& entry : lexicon.entries()) {
    const std::string& surface = entry.form.surface;
    if (!prototypes_.contains(surface)) prototypes_.emplace(surface, average_senses(surface, lexicon, universe));
  }
  const std::size_t dim = universe.dimension();
  unit_embeddings_.resize(universe.size() * dim);
  for (ConceptIndex c = 0; c < universe.size(); ++c) {
    const auto& e = universe[c].embedding;
    const double n = norm(e);
    for (std::size_t d = 0; d < dim; ++d) unit_embeddings_[c * dim + d] = e[d] / n;
  }
}

std::span<const double> ListenerModel::lexicon_prototype(std::string_view surface) const {
  auto it = prototypes_.find(std::string(surface));
  if (it == prototypes_.end()) throw ValidationError("form '" + std::string(surface) + "' is not in the lexicon");
  return it->second;
}

std::vector<double> ListenerModel::combination_prototype(std::string_view first, std::string_view second) const {
  std::string surface;
  surface.append(first).push_back(lexicon_->separator());
  surface.append(second);
  if (auto it = prototypes_.find(surface); it != prototypes_.end()) return it->second;
  auto a = lexicon_prototype(first);
  auto b = lexicon_prototype(second);
  std::vector<double> q(a.size());
  for (std::size_t d = 0; d < q.size(); ++d) q[d] = a[d] + b[d];
  return q;
}

std::vector<double> ListenerModel::prototype(const Form& form) const {
  if (auto it = prototypes_.find(form.surface); it != prototypes_.end()) return it->second;
  if (form.constituents.size() != 2) {
    throw ValidationError("form '" + form.surface + "' is not in the lexicon");
  }
  auto a = lexicon_prototype(form.constituents[0]);
  auto b = lexicon_prototype(form.constituents[1]);
  std::vector<double> q(a.size());
  for (std::size_t d = 0; d < q.size(); ++d) q[d] = a[d] + b[d];
  return q;
}

std::vector<double> ListenerModel::distances(std::span<const double> q) const {
  const std::size_t dim = universe_->dimension();
  if (q.size() != dim) throw ValidationError("prototype dimension mismatch");
  const double qn = norm(q);
  if (qn == 0.0) throw ValidationError("prototype has zero norm");
  std::vector<double> out(universe_->size());
  for (ConceptIndex c = 0; c < out.size(); ++c) {
    const double* u = unit_embeddings_.data() + c * dim;
    double dot = 0.0;
    for (std::size_t d = 0; d < dim; ++d) dot += u[d] * q[d];
    out[c] = std::clamp(1.0 - dot / qn, 0.0, 2.0);
  }
  return out;
}

std::vector<double> ListenerModel::distribution(std::span<const double> q) const {
  return softmax_of_distances(distances(q), params_.gamma);
}

double ListenerModel::surprisal(std::span<const double> q, ConceptIndex concept_index) const {
  const std::vector<double> d = distances(q);
  const double gamma = params_.gamma;
  const double min_distance = *std::min_element(d.begin(), d.end());
  double total = 0.0;
  for (double x : d) total += std::exp(-gamma * (x - min_distance));
  // -log2 p = gamma (d_c - d_min) log2(e) + log2(sum)
  const double bits = gamma * (d[concept_index] - min_distance) * std::numbers::log2e + std::log2(total);
  return std::clamp(bits, 0.0, kMaxSurprisal);
}

double ListenerModel::surprisal(const Form& form, ConceptIndex concept_index) const {
  return surprisal(prototype(form), concept_index);
}

}  // namespace lexeff
