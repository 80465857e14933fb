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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexeff/baselines.hpp"
#include "lexeff/costs.hpp"
#include "lexeff/frontier.hpp"
#include "lexeff/stats.hpp"
#include "lexeff/taxonomy.hpp"

namespace lexeff::app {

/// In-memory TSV table; cells are already formatted.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_tsv(std::ostream& out, const Table& table);
std::string to_tsv(const Table& table);

/// Copy of `table` with a leading constant column.
Table prefix_column(const Table& table, const std::string& name, const std::string& value);
/// Appends rows; adopts the header when `into` is empty. Throws Error when
/// the headers differ.
void append_rows(Table& into, const Table& from);

std::string format_optional(const std::optional<double>& value);
std::string_view strategy_code(Strategy strategy);

Table cost_table(const CostPoint& cost);
Table item_cost_table(const Encoding& encoding, const std::vector<ItemCost>& items, const Universe& universe);
Table frontier_table(const FrontierResult& frontier);
Table frontier_label_table(const FrontierResult& frontier, const Universe& universe);
Table loss_table(const std::string& encoding_id, const EfficiencyLoss& loss);
Table item_loss_table(const Encoding& encoding, const std::vector<ItemCost>& items,
                      const std::vector<EfficiencyLoss>& losses, const Universe& universe);
Table baseline_summary_table(const std::vector<BaselineSummary>& summaries);
Table baseline_dump_table(const BaselineSummary& summary);

struct TaxonomyRow {
  std::string item_id;
  std::string surface;
  Strategy strategy = Strategy::kReuse;
  std::optional<bool> literal;
  std::optional<CompoundClass> compound_class;
  std::optional<SenseSimilarity> similarity;
};
Table taxonomy_table(const std::vector<TaxonomyRow>& rows);

/// Two samples to contrast with a pooled t-test and bootstrap CIs.
struct Comparison {
  std::string name;
  std::string label_a;
  std::string label_b;
  std::vector<double> a;
  std::vector<double> b;
};

/// One row per comparison. Statistics that cannot be computed (too few
/// values, zero variance) are written as NA with a note.
Table comparison_table(const std::vector<Comparison>& comparisons, std::size_t resamples, std::uint64_t seed);

/// Reads one numeric column of a TSV file; NA cells are skipped.
std::vector<double> read_column(const std::filesystem::path& path, const std::string& column);

}  // namespace lexeff::app
