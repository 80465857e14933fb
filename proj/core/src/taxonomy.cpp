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

#include "lexeff/taxonomy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>

#include "lexeff/io.hpp"

namespace lexeff {

namespace {

std::string describe_cycle(const std::vector<std::string>& cycle) {
  std::string out = "taxonomy contains a cycle: ";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " -> ";
    out += cycle[i];
  }
  return out;
}

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle) : ValidationError(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

TaxonomyGraph::TaxonomyGraph(const Universe& universe, std::span<const std::pair<ConceptIndex, ConceptIndex>> edges) {
  const std::size_t n = universe.size();
  parents_.resize(n);
  for (auto [child, parent] : edges) {
    if (child >= n || parent >= n) throw ValidationError("taxonomy edge references an unknown concept");
    if (child == parent) throw CycleError({universe[child].id, universe[child].id});
    auto& list = parents_[child];
    if (std::find(list.begin(), list.end(), parent) == list.end()) list.push_back(parent);
  }
  for (auto& list : parents_) std::sort(list.begin(), list.end());

  // Iterative DFS along parent edges. Post-order places parents before
  // children, which is the order ancestor sets are built in.
  enum : unsigned char { kWhite, kGrey, kBlack };
  std::vector<unsigned char> colour(n, kWhite);
  std::vector<ConceptIndex> order;
  order.reserve(n);
  std::vector<std::pair<ConceptIndex, std::size_t>> stack;
  for (ConceptIndex start = 0; start < n; ++start) {
    if (colour[start] != kWhite) continue;
    stack.push_back({start, 0});
    colour[start] = kGrey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < parents_[node].size()) {
        const ConceptIndex parent = parents_[node][next++];
        if (colour[parent] == kGrey) {
          std::vector<std::string> cycle;
          auto it = std::find_if(stack.begin(), stack.end(), [&](const auto& f) { return f.first == parent; });
          for (; it != stack.end(); ++it) cycle.push_back(universe[it->first].id);
          cycle.push_back(universe[parent].id);
          throw CycleError(std::move(cycle));
        }
        if (colour[parent] == kWhite) {
          colour[parent] = kGrey;
          stack.push_back({parent, 0});
        }
      } else {
        colour[node] = kBlack;
        order.push_back(node);
        stack.pop_back();
      }
    }
  }

  ancestors_.resize(n);
  depth_.assign(n, kUnreached);
  for (ConceptIndex c : order) {
    std::vector<std::pair<ConceptIndex, std::size_t>> merged{{c, 0}};
    for (ConceptIndex p : parents_[c]) {
      for (auto [a, d] : ancestors_[p]) merged.push_back({a, d + 1});
    }
    std::sort(merged.begin(), merged.end());
    // Keep the smallest distance per ancestor (first after sorting).
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const auto& x, const auto& y) { return x.first == y.first; }),
                 merged.end());
    ancestors_[c] = std::move(merged);

    if (parents_[c].empty()) {
      roots_.push_back(c);
      depth_[c] = 1;
    } else {
      for (ConceptIndex p : parents_[c]) depth_[c] = std::min(depth_[c], depth_[p] + 1);
    }
    max_depth_ = std::max(max_depth_, depth_[c]);
  }
  std::sort(roots_.begin(), roots_.end());
}

std::optional<std::size_t> TaxonomyGraph::up_distance(ConceptIndex c, ConceptIndex ancestor) const {
  const auto& list = ancestors_[c];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair<ConceptIndex, std::size_t>{ancestor, 0});
  if (it == list.end() || it->first != ancestor) return std::nullopt;
  return it->second;
}

bool TaxonomyGraph::is_strict_ancestor(ConceptIndex ancestor, ConceptIndex c) const {
  return ancestor != c && up_distance(c, ancestor).has_value();
}

TaxonomyGraph parse_taxonomy(std::istream& in, const Universe& universe, const std::string& source) {
  std::vector<std::pair<ConceptIndex, ConceptIndex>> edges;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    auto cells = split(line, '\t');
    if (cells.size() < 2) throw ParseError(source, line_no, "expected child_id<TAB>parent_id");
    auto child = trim(cells[0]);
    auto parent = trim(cells[1]);
    if (first && child == "child_id") {
      first = false;
      continue;
    }
    first = false;
    auto c = universe.find(child);
    if (!c) throw ParseError(source, line_no, "unknown concept id '" + std::string(child) + "'");
    auto p = universe.find(parent);
    if (!p) throw ParseError(source, line_no, "unknown concept id '" + std::string(parent) + "'");
    edges.push_back({*c, *p});
  }
  return TaxonomyGraph(universe, edges);
}

TaxonomyGraph load_taxonomy(const std::filesystem::path& path, const Universe& universe) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_taxonomy(in, universe, path.string());
}

bool is_literal(ConceptIndex concept_index, const Form& form, const Lexicon& lexicon, const TaxonomyGraph& graph) {
  auto senses = lexicon.senses_of(form.surface);
  if (senses.empty()) throw ValidationError("form '" + form.surface + "' is not in the lexicon");
  return std::any_of(senses.begin(), senses.end(), [&](std::size_t e) {
    return graph.is_strict_ancestor(lexicon.entries()[e].concept_index, concept_index);
  });
}

std::string_view to_string(CompoundClass value) {
  return value == CompoundClass::kEndocentric ? "endocentric" : "exocentric";
}

CompoundClass classify_compound(ConceptIndex concept_index, const Form& form, const Lexicon& lexicon,
                                const TaxonomyGraph& graph) {
  if (form.constituents.size() != 2) throw ValidationError("'" + form.surface + "' is not a two-constituent compound");
  const std::string head = lexicon.split_head(form).second;
  if (!lexicon.contains(head)) throw ValidationError("head '" + head + "' of '" + form.surface + "' is not in the lexicon");
  return is_literal(concept_index, lexicon.form(head), lexicon, graph) ? CompoundClass::kEndocentric
                                                                 : CompoundClass::kExocentric;
}

namespace {

// Common ancestors of two concepts with their up-distances from each.
struct Common {
  ConceptIndex ancestor;
  std::size_t from_first;
  std::size_t from_second;
};

std::vector<Common> common_ancestors(ConceptIndex c1, ConceptIndex c2, const TaxonomyGraph& graph) {
  auto a = graph.ancestors(c1);
  auto b = graph.ancestors(c2);
  std::vector<Common> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      out.push_back({a[i].first, a[i].second, b[j].second});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

double wu_palmer(ConceptIndex c1, ConceptIndex c2, const TaxonomyGraph& graph, const Universe& universe) {
  const auto common = common_ancestors(c1, c2, graph);
  if (common.empty()) throw ValidationError("concepts '" + universe[c1].id + "' and '" + universe[c2].id +
                                            "' share no ancestor");
  // Each common ancestor a gives 2 depth(a) / (2 depth(a) + u1 + u2), where
  // u1 and u2 are the up-distances to a. On a tree the deepest common
  // ancestor maximizes this; on a DAG a deeper ancestor reached by a longer
  // route can score lower, so the maximum is taken directly. Ties prefer
  // the deeper ancestor, then the smaller id.
  double best = -1.0;
  const Common* lcs = nullptr;
  for (const auto& candidate : common) {
    const auto d = static_cast<double>(graph.depth(candidate.ancestor));
    const double score = 2.0 * d / (2.0 * d + static_cast<double>(candidate.from_first + candidate.from_second));
    const bool better = [&] {
      if (lcs == nullptr || score > best) return true;
      if (score < best) return false;
      const std::size_t ld = graph.depth(lcs->ancestor);
      if (graph.depth(candidate.ancestor) != ld) return graph.depth(candidate.ancestor) > ld;
      return universe[candidate.ancestor].id < universe[lcs->ancestor].id;
    }();
    if (better) {
      best = score;
      lcs = &candidate;
    }
  }
  return best;
}

double leacock_chodorow(ConceptIndex c1, ConceptIndex c2, const TaxonomyGraph& graph) {
  const auto common = common_ancestors(c1, c2, graph);
  if (common.empty()) throw ValidationError("leacock_chodorow: concepts are not connected");
  std::size_t edges = std::numeric_limits<std::size_t>::max();
  for (const auto& c : common) edges = std::min(edges, c.from_first + c.from_second);
  const double nodes = static_cast<double>(edges + 1);
  return -std::log2(nodes / (2.0 * static_cast<double>(graph.max_depth())));
}

HeadAugmentation augment_reuse_with_heads(const Encoding& compounds, const Lexicon& lexicon) {
  HeadAugmentation out;
  std::vector<EncodingItem> items;
  for (const auto& item : compounds.items()) {
    if (item.form.constituents.size() != 2) {
      throw ValidationError("'" + item.form.surface + "' is not a two-constituent compound");
    }
    const std::string head = lexicon.split_head(item.form).second;
    if (!lexicon.contains(head)) {
      ++out.dropped;
      continue;
    }
    EncodingItem reuse;
    reuse.concept_index = item.concept_index;
    reuse.form = lexicon.form(head);
    reuse.strategy = Strategy::kReuse;
    items.push_back(std::move(reuse));
  }
  out.encoding = Encoding(std::move(items));
  return out;
}

std::optional<SenseSimilarity> nearest_sense_similarity(ConceptIndex concept_index, std::string_view surface,
                                                        const Lexicon& lexicon, const TaxonomyGraph& graph,
                                                        const Universe& universe) {
  std::optional<SenseSimilarity> best;
  for (std::size_t e : lexicon.senses_of(surface)) {
    const ConceptIndex sense = lexicon.entries()[e].concept_index;
    if (common_ancestors(concept_index, sense, graph).empty()) continue;
    const double wup = wu_palmer(concept_index, sense, graph, universe);
    const double lch = leacock_chodorow(concept_index, sense, graph);
    if (!best) {
      best = SenseSimilarity{wup, lch};
    } else {
      best->wu_palmer = std::max(best->wu_palmer, wup);
      best->leacock_chodorow = std::max(best->leacock_chodorow, lch);
    }
  }
  return best;
}

}  // namespace lexeff
