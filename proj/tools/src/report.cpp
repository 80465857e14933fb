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

#include "lexeff/app/report.hpp"

#include <ostream>
#include <sstream>

#include "lexeff/error.hpp"
#include "lexeff/io.hpp"
#include "lexeff/rng.hpp"

namespace lexeff::app {

namespace {

const std::string kNa = "NA";

std::string num(double value) { return format_number(value); }

}  // namespace

void write_tsv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << '\t';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

std::string to_tsv(const Table& table) {
  std::ostringstream out;
  write_tsv(out, table);
  return out.str();
}

Table prefix_column(const Table& table, const std::string& name, const std::string& value) {
  Table out;
  out.header.push_back(name);
  out.header.insert(out.header.end(), table.header.begin(), table.header.end());
  for (const auto& row : table.rows) {
    std::vector<std::string> r{value};
    r.insert(r.end(), row.begin(), row.end());
    out.rows.push_back(std::move(r));
  }
  return out;
}

void append_rows(Table& into, const Table& from) {
  if (into.header.empty()) into.header = from.header;
  if (into.header != from.header) throw Error("append_rows: header mismatch");
  into.rows.insert(into.rows.end(), from.rows.begin(), from.rows.end());
}

std::string format_optional(const std::optional<double>& value) { return value ? num(*value) : kNa; }

std::string_view strategy_code(Strategy strategy) { return strategy == Strategy::kReuse ? "R" : "C"; }

Table cost_table(const CostPoint& cost) {
  return {{"avg_length", "info_loss"}, {{num(cost.avg_length), num(cost.info_loss)}}};
}

Table item_cost_table(const Encoding& encoding, const std::vector<ItemCost>& items, const Universe& universe) {
  Table t{{"surface", "concept_id", "length", "surprisal", "weight"}, {}};
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    t.rows.push_back({encoding[i].form.surface, universe[encoding[i].concept_index].id, num(items[i].length),
                      num(items[i].surprisal), num(items[i].weight)});
  }
  return t;
}

Table frontier_table(const FrontierResult& frontier) {
  Table t{{"beta", "avg_length", "info_loss", "pareto"}, {}};
  for (const auto& p : frontier.points) {
    bool on_pareto = false;
    for (const auto& q : frontier.pareto_points) on_pareto = on_pareto || q == p.cost;
    t.rows.push_back({num(p.beta), num(p.cost.avg_length), num(p.cost.info_loss), on_pareto ? "1" : "0"});
  }
  return t;
}

Table frontier_label_table(const FrontierResult& frontier, const Universe& universe) {
  Table t{{"beta", "concept_id", "surface", "length", "surprisal"}, {}};
  for (const auto& p : frontier.points) {
    for (std::size_t i = 0; i < p.encoding.size(); ++i) {
      t.rows.push_back({num(p.beta), universe[p.encoding[i].concept_index].id, p.encoding[i].form.surface,
                        num(p.items[i].length), num(p.items[i].surprisal)});
    }
  }
  return t;
}

Table loss_table(const std::string& encoding_id, const EfficiencyLoss& loss) {
  return {{"encoding_id", "epsilon", "argmin_beta", "raw"},
          {{encoding_id, num(loss.epsilon), num(loss.argmin_beta), num(loss.raw)}}};
}

Table item_loss_table(const Encoding& encoding, const std::vector<ItemCost>& items,
                      const std::vector<EfficiencyLoss>& losses, const Universe& universe) {
  Table t{{"item_id", "surface", "strategy", "length", "surprisal", "epsilon", "argmin_beta", "raw"}, {}};
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    t.rows.push_back({universe[encoding[i].concept_index].id, encoding[i].form.surface,
                      std::string(strategy_code(encoding[i].strategy)), num(items[i].length),
                      num(items[i].surprisal), num(losses[i].epsilon), num(losses[i].argmin_beta),
                      num(losses[i].raw)});
  }
  return t;
}

Table baseline_summary_table(const std::vector<BaselineSummary>& summaries) {
  Table t{{"kind", "mean_loss", "ci_lo", "ci_hi", "n"}, {}};
  for (const auto& s : summaries) {
    t.rows.push_back({std::string(to_string(s.kind)), num(s.mean_loss), num(s.ci.lo), num(s.ci.hi),
                      std::to_string(s.n)});
  }
  return t;
}

Table baseline_dump_table(const BaselineSummary& summary) {
  Table t{{"kind", "replicate", "avg_length", "info_loss", "epsilon"}, {}};
  const std::string kind(to_string(summary.kind));
  for (std::size_t r = 0; r < summary.losses.size(); ++r) {
    t.rows.push_back({kind, std::to_string(r), num(summary.costs[r].avg_length), num(summary.costs[r].info_loss),
                      num(summary.losses[r])});
  }
  return t;
}

Table taxonomy_table(const std::vector<TaxonomyRow>& rows) {
  Table t{{"item_id", "surface", "strategy", "literal", "compound_class", "wup_to_nearest_sense",
           "lch_to_nearest_sense"},
          {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.item_id, r.surface, std::string(strategy_code(r.strategy)),
                      r.literal ? (*r.literal ? "1" : "0") : kNa,
                      r.compound_class ? std::string(to_string(*r.compound_class)) : kNa,
                      r.similarity ? num(r.similarity->wu_palmer) : kNa,
                      r.similarity ? num(r.similarity->leacock_chodorow) : kNa});
  }
  return t;
}

Table comparison_table(const std::vector<Comparison>& comparisons, std::size_t resamples, std::uint64_t seed) {
  Table t{{"comparison", "group_a", "group_b", "n_a", "n_b", "mean_a", "mean_b", "ci_a_lo", "ci_a_hi", "ci_b_lo",
           "ci_b_hi", "t", "df", "p", "note"},
          {}};
  for (const auto& c : comparisons) {
    std::vector<std::string> row{c.name, c.label_a, c.label_b, std::to_string(c.a.size()), std::to_string(c.b.size())};
    std::string note;
    auto describe = [&](const std::vector<double>& sample, const std::string& label) -> std::vector<std::string> {
      if (sample.empty()) {
        note += (note.empty() ? "" : "; ") + label + " is empty";
        return {kNa, kNa, kNa};
      }
      const auto ci = bootstrap_ci(sample, Statistic::kMean, resamples, mix64(seed ^ stable_hash(c.name + "/" + label)));
      return {num(mean(sample)), num(ci.lo), num(ci.hi)};
    };
    const auto a = describe(c.a, c.label_a);
    const auto b = describe(c.b, c.label_b);
    row.insert(row.end(), {a[0], b[0], a[1], a[2], b[1], b[2]});
    try {
      const auto test = t_test_pooled(c.a, c.b);
      row.insert(row.end(), {num(test.t), std::to_string(test.df), num(test.p_two_sided)});
    } catch (const ValidationError& e) {
      if (note.empty()) note = e.what();
      row.insert(row.end(), {kNa, kNa, kNa});
    }
    row.push_back(note.empty() ? kNa : note);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<double> read_column(const std::filesystem::path& path, const std::string& column) {
  const auto table = TsvTable::load(path);
  table.require(column);
  std::vector<double> out;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    if (auto v = table.optional_number(r, column)) out.push_back(*v);
  }
  return out;
}

}  // namespace lexeff::app
