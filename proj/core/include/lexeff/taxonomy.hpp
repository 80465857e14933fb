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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexeff/error.hpp"
#include "lexeff/lexicon.hpp"

namespace lexeff {

/// Raised for a taxonomy containing a directed cycle; `cycle()` lists the
/// concept ids along it, first id repeated at the end.
class CycleError : public ValidationError {
 public:
  explicit CycleError(std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Hypernym DAG over universe concepts. Edges point from child to parent.
/// Depth counts nodes from a root, so roots have depth 1; with multiple
/// parents the shortest hypernym path is used.
class TaxonomyGraph {
 public:
  TaxonomyGraph() = default;
  /// Edges are (child, parent) pairs of universe indices. Throws CycleError
  /// when they contain a cycle.
  TaxonomyGraph(const Universe& universe, std::span<const std::pair<ConceptIndex, ConceptIndex>> edges);

  std::size_t size() const noexcept { return parents_.size(); }
  std::span<const ConceptIndex> parents(ConceptIndex c) const { return parents_[c]; }
  const std::vector<ConceptIndex>& roots() const noexcept { return roots_; }

  /// Ancestors of c including c itself, with the fewest upward edges to
  /// reach each, sorted by ancestor index.
  std::span<const std::pair<ConceptIndex, std::size_t>> ancestors(ConceptIndex c) const {
    return ancestors_[c];
  }
  std::optional<std::size_t> up_distance(ConceptIndex c, ConceptIndex ancestor) const;
  /// True iff `ancestor` is reachable from c by one or more parent edges.
  bool is_strict_ancestor(ConceptIndex ancestor, ConceptIndex c) const;

  std::size_t depth(ConceptIndex c) const { return depth_[c]; }
  std::size_t max_depth() const noexcept { return max_depth_; }

 private:
  std::vector<std::vector<ConceptIndex>> parents_;
  std::vector<ConceptIndex> roots_;
  std::vector<std::vector<std::pair<ConceptIndex, std::size_t>>> ancestors_;
  std::vector<std::size_t> depth_;
  std::size_t max_depth_ = 0;
};

/// Columns: child_id, parent_id (header optional).
TaxonomyGraph parse_taxonomy(std::istream& in, const Universe& universe,
                             const std::string& source = "taxonomy");
TaxonomyGraph load_taxonomy(const std::filesystem::path& path, const Universe& universe);

/// True iff the concept is a strict hyponym of some sense of the form in L.
/// Throws ValidationError when the form is not in L.
bool is_literal(ConceptIndex concept_index, const Form& form, const Lexicon& lexicon,
                const TaxonomyGraph& graph);

enum class CompoundClass { kEndocentric, kExocentric };

std::string_view to_string(CompoundClass value);

/// Endocentric iff (concept, head constituent) is a literal item. Throws
/// ValidationError for non-compounds or a head absent from L.
CompoundClass classify_compound(ConceptIndex concept_index, const Form& form, const Lexicon& lexicon,
                                const TaxonomyGraph& graph);

/// 2 depth(lcs) / (depth(c1) + depth(c2)), with depth(ci) taken as depth(lcs)
/// plus the up-distance from ci to the lcs. On a tree the lcs is the deepest
/// common ancestor; on a DAG it is the common ancestor with the highest
/// score, ties going to the deeper one and then the smaller id. Throws
/// ValidationError when the concepts share no ancestor.
double wu_palmer(ConceptIndex c1, ConceptIndex c2, const TaxonomyGraph& graph,
                 const Universe& universe);

/// -log2(len / (2 D)) where len counts nodes on the shortest path through a
/// common ancestor and D is the taxonomy's maximum depth.
double leacock_chodorow(ConceptIndex c1, ConceptIndex c2, const TaxonomyGraph& graph);

struct HeadAugmentation {
  Encoding encoding;
  std::size_t dropped = 0;
};

/// Reuse-style encoding pairing each compound's concept with its head word.
/// Items whose head is not in L are dropped and counted.
HeadAugmentation augment_reuse_with_heads(const Encoding& compounds, const Lexicon& lexicon);

/// Best similarity between a concept and any sense of an L surface, or
/// nullopt when no sense shares an ancestor with it.
struct SenseSimilarity {
  double wu_palmer = 0.0;
  double leacock_chodorow = 0.0;
};
std::optional<SenseSimilarity> nearest_sense_similarity(ConceptIndex concept_index,
                                                        std::string_view surface,
                                                        const Lexicon& lexicon,
                                                        const TaxonomyGraph& graph,
                                                        const Universe& universe);

}  // namespace lexeff
