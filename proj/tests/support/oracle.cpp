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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <set>

namespace lexeff::testing {

Universe random_universe(std::uint64_t seed, std::size_t n, std::size_t dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Concept> concepts;
  for (std::size_t i = 0; i < n; ++i) {
    Concept c;
    c.id = "c" + std::to_string(i);
    double norm = 0.0;
    while (norm < 1e-3) {
      c.embedding.assign(dim, 0.0);
      norm = 0.0;
      for (double& x : c.embedding) {
        x = normal(rng);
        norm += x * x;
      }
      norm = std::sqrt(norm);
    }
    for (double& x : c.embedding) x /= norm;
    c.english_need_weight = 1.0 + static_cast<double>(rng() % 50);
    concepts.push_back(std::move(c));
  }
  return Universe(std::move(concepts));
}

std::unique_ptr<RandomWorld> make_random_world(std::uint64_t seed, const RandomWorldSpec& spec) {
  std::mt19937_64 rng(seed);
  auto between = [&](std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
  };
  const std::size_t n_forms = between(spec.min_forms, spec.max_forms);
  const std::size_t n_concepts = std::max(between(spec.min_concepts, spec.max_concepts), n_forms + 3);
  const std::size_t dim = between(spec.min_dim, spec.max_dim);

  auto world = std::make_unique<RandomWorld>();
  world->universe = random_universe(rng(), n_concepts, dim);

  // Distinct surfaces of 1-6 letters.
  std::set<std::string> surfaces;
  while (surfaces.size() < n_forms) {
    std::string s;
    const std::size_t len = between(1, 6);
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<char>('a' + rng() % 26));
    surfaces.insert(s);
  }

  // Senses are drawn from the first n_concepts - 3 concepts; the rest stay
  // unlexicalized and serve as emerging concepts.
  const std::size_t n_lexicalized = n_concepts - 3;
  static const char* kClasses[] = {"n", "v", "adj"};
  std::vector<LexiconEntry> entries;
  for (const auto& s : surfaces) {
    Form form{s, {s}, static_cast<int>(s.size()), {kClasses[rng() % 3]}};
    const double form_freq = static_cast<double>(rng() % 1000);
    const std::size_t n_senses = rng() % 4 == 0 ? 2 : 1;
    std::set<ConceptIndex> used;
    while (used.size() < n_senses) used.insert(rng() % n_lexicalized);
    for (ConceptIndex c : used) {
      entries.push_back({form, c, form_freq, static_cast<double>(rng() % 200)});
    }
  }
  world->lexicon = Lexicon(std::move(entries), world->universe, {});
  for (ConceptIndex c = n_lexicalized; c < n_concepts; ++c) world->emerging.push_back(c);
  return world;
}

std::vector<double> oracle_prototype(const Lexicon& lexicon, const Universe& universe, const std::string& surface) {
  std::vector<double> q(universe.dimension(), 0.0);
  double total = 0.0;
  for (const auto& e : lexicon.entries()) {
    if (e.form.surface != surface) continue;
    const double w = std::floor(e.sense_frequency + 0.5) + 1.0;
    total += w;
    for (std::size_t d = 0; d < q.size(); ++d) q[d] += w * universe[e.concept_index].embedding[d];
  }
  for (double& x : q) x /= total;
  return q;
}

namespace {

double oracle_surprisal(const std::vector<double>& q, const Universe& universe, double gamma, ConceptIndex target) {
  double qn = 0.0;
  for (double x : q) qn += x * x;
  qn = std::sqrt(qn);
  double total = 0.0, own = 0.0;
  for (ConceptIndex c = 0; c < universe.size(); ++c) {
    const auto& e = universe[c].embedding;
    double dot = 0.0, en = 0.0;
    for (std::size_t d = 0; d < q.size(); ++d) {
      dot += e[d] * q[d];
      en += e[d] * e[d];
    }
    const double p = std::exp(-gamma * (1.0 - dot / (std::sqrt(en) * qn)));
    total += p;
    if (c == target) own = p;
  }
  return -std::log2(own / total);
}

}  // namespace

std::vector<OracleCandidate> oracle_candidates(const Lexicon& lexicon, const Universe& universe, double gamma,
                                               ConceptIndex target) {
  std::vector<std::string> atoms;
  for (const auto& e : lexicon.entries()) {
    if (e.form.constituents.size() == 1) atoms.push_back(e.form.surface);
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  std::vector<std::vector<double>> protos;
  for (const auto& a : atoms) protos.push_back(oracle_prototype(lexicon, universe, a));

  std::vector<OracleCandidate> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    out.push_back({atoms[i], static_cast<double>(atoms[i].size()), oracle_surprisal(protos[i], universe, gamma, target)});
  }
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (std::size_t b = 0; b < atoms.size(); ++b) {
      std::vector<double> q(protos[a].size());
      for (std::size_t d = 0; d < q.size(); ++d) q[d] = protos[a][d] + protos[b][d];
      const std::string surface = atoms[a] + " " + atoms[b];
      out.push_back({surface, static_cast<double>(surface.size()), oracle_surprisal(q, universe, gamma, target)});
    }
  }
  return out;
}

std::size_t oracle_best(const std::vector<OracleCandidate>& candidates, double beta, double tolerance) {
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) lowest = std::min(lowest, c.surprisal + beta * c.length);
  std::size_t best = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (c.surprisal + beta * c.length > lowest + tolerance) continue;
    if (best == candidates.size() || c.length < candidates[best].length ||
        (c.length == candidates[best].length && c.surface < candidates[best].surface)) {
      best = i;
    }
  }
  return best;
}

RandomDag make_random_dag(std::uint64_t seed, std::size_t n, double edge_probability) {
  std::mt19937_64 rng(seed);
  RandomDag dag;
  dag.universe = random_universe(rng(), n, 2);
  std::vector<ConceptIndex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(edge_probability);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (edge(rng)) dag.edges.push_back({order[i], order[j]});
    }
  }
  return dag;
}

namespace {

void dfs(const std::vector<std::vector<ConceptIndex>>& up, ConceptIndex node, std::vector<bool>& seen) {
  if (seen[node]) return;
  seen[node] = true;
  for (ConceptIndex p : up[node]) dfs(up, p, seen);
}

std::vector<std::vector<ConceptIndex>> parent_lists(const std::vector<std::pair<ConceptIndex, ConceptIndex>>& edges,
                                                    std::size_t n) {
  std::vector<std::vector<ConceptIndex>> up(n);
  for (auto [child, parent] : edges) up[child].push_back(parent);
  return up;
}

}  // namespace

std::vector<bool> dfs_reachable(const std::vector<std::pair<ConceptIndex, ConceptIndex>>& edges, std::size_t n,
                                ConceptIndex from) {
  std::vector<bool> seen(n, false);
  dfs(parent_lists(edges, n), from, seen);
  return seen;
}

std::vector<std::size_t> bfs_up_distances(const std::vector<std::pair<ConceptIndex, ConceptIndex>>& edges,
                                          std::size_t n, ConceptIndex from) {
  const auto up = parent_lists(edges, n);
  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  std::deque<ConceptIndex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const ConceptIndex node = queue.front();
    queue.pop_front();
    for (ConceptIndex p : up[node]) {
      if (dist[p] != std::numeric_limits<std::size_t>::max()) continue;
      dist[p] = dist[node] + 1;
      queue.push_back(p);
    }
  }
  return dist;
}

}  // namespace lexeff::testing
