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

#include "lexeff/app/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "json.hpp"

#include "lexeff/app/hash.hpp"
#include "lexeff/app/plot.hpp"
#include "lexeff/io.hpp"
#include "lexeff/version.hpp"

namespace lexeff::app {

StageError::StageError(std::string stage, const std::string& message, int exit_code)
    : Error("[" + stage + "] " + message), stage_(std::move(stage)), exit_code_(exit_code) {}

namespace {

void require_file(const std::filesystem::path& path, const std::string& key) {
  if (path.empty()) throw ValidationError("config key '" + key + "' is not set");
  if (!std::filesystem::is_regular_file(path)) {
    throw ValidationError(key + " file not found: " + path.string());
  }
}

}  // namespace

std::unique_ptr<Inputs> load_inputs(const AnalysisConfig& config, InputNeeds needs) {
  return in_stage("load", [&] {
    require_file(config.concepts, "concepts");
    require_file(config.embeddings, "embeddings");
    require_file(config.lexicon, "lexicon");
    if (needs.encoding) require_file(config.encoding, "encoding");
    if (needs.taxonomy) require_file(config.taxonomy, "taxonomy");

    auto inputs = std::make_unique<Inputs>();
    inputs->universe = load_universe(config.concepts, config.embeddings);
    inputs->lexicon = load_lexicon(config.lexicon, inputs->universe, config.lexicon_options);
    if (needs.encoding) inputs->encoding = load_encoding(config.encoding, inputs->universe, inputs->lexicon);
    if (!config.taxonomy.empty()) {
      require_file(config.taxonomy, "taxonomy");
      inputs->taxonomy = load_taxonomy(config.taxonomy, inputs->universe);
    }
    if (!config.antonyms.empty()) {
      require_file(config.antonyms, "antonyms");
      inputs->antonyms = load_antonyms(config.antonyms);
    }
    inputs->listener.emplace(inputs->lexicon, inputs->universe, ListenerParams{config.gamma});
    return inputs;
  });
}

std::vector<std::string> validate(const AnalysisConfig& config) {
  std::vector<std::string> out;
  auto attempt = [&](const std::string& what, auto&& body) {
    try {
      body();
      return true;
    } catch (const std::exception& e) {
      out.push_back(what + ": " + e.what());
      return false;
    }
  };
  auto present = [&](const std::filesystem::path& path, const std::string& key, bool required) {
    if (path.empty()) {
      if (required) out.push_back(key + ": not set");
      return false;
    }
    if (!std::filesystem::is_regular_file(path)) {
      out.push_back(key + ": file not found: " + path.string());
      return false;
    }
    return true;
  };

  Universe universe;
  Lexicon lexicon;
  const bool have_concepts = present(config.concepts, "concepts", true);
  const bool have_embeddings = present(config.embeddings, "embeddings", true);
  const bool universe_ok = have_concepts && have_embeddings &&
                           attempt("universe", [&] { universe = load_universe(config.concepts, config.embeddings); });
  const bool lexicon_ok = present(config.lexicon, "lexicon", true) && universe_ok &&
                          attempt("lexicon", [&] { lexicon = load_lexicon(config.lexicon, universe, config.lexicon_options); });
  if (present(config.encoding, "encoding", true) && lexicon_ok) {
    attempt("encoding", [&] {
      std::ifstream in(config.encoding, std::ios::binary);
      const auto encoding = parse_encoding(in, universe, lexicon, config.encoding.string());
      for (const auto& problem : check_encoding(encoding, lexicon, universe)) out.push_back("encoding: " + problem);
    });
  }
  if (present(config.taxonomy, "taxonomy", false) && universe_ok) {
    attempt("taxonomy", [&] { load_taxonomy(config.taxonomy, universe); });
  }
  if (present(config.antonyms, "antonyms", false)) {
    attempt("antonyms", [&] { load_antonyms(config.antonyms); });
  }
  attempt("beta_grid", [&] { validate_beta_grid(config.beta_grid); });
  return out;
}

Group parse_group(const std::string& text) {
  if (text == "all") return Group::kAll;
  if (text == "reuse" || text == "R") return Group::kReuse;
  if (text == "combination" || text == "C") return Group::kCombination;
  throw ValidationError("unknown strategy group '" + text + "' (expected all, reuse or combination)");
}

std::string_view to_string(Group group) {
  switch (group) {
    case Group::kAll: return "all";
    case Group::kReuse: return "reuse";
    case Group::kCombination: return "combination";
  }
  return "all";
}

Encoding select(const Encoding& encoding, Group group) {
  switch (group) {
    case Group::kReuse: return encoding.filter(Strategy::kReuse);
    case Group::kCombination: return encoding.filter(Strategy::kCombination);
    case Group::kAll: break;
  }
  return encoding;
}

FrontierParams frontier_params(const AnalysisConfig& config) {
  return {config.beta_grid, config.search_mode, config.threads};
}

BaselineOptions baseline_options(const AnalysisConfig& config, const AntonymSet& antonyms) {
  BaselineOptions options;
  options.near_synonyms = {config.k, antonyms, config.respect_word_class};
  options.replicates = {config.replicates, config.seed};
  options.bootstrap_resamples = config.bootstrap_resamples;
  options.threads = config.threads;
  return options;
}

GroupResult analyze(std::string name, Encoding encoding, const Inputs& inputs, const AnalysisConfig& config) {
  if (encoding.empty()) throw ValidationError("encoding group '" + name + "' has no items");
  GroupResult r;
  r.name = std::move(name);
  r.encoding = std::move(encoding);
  const auto& listener = *inputs.listener;
  const auto need = need_marginal(r.encoding, inputs.lexicon, inputs.universe, config.need_model);
  r.items = item_costs(r.encoding, listener, need);
  r.cost = combine_costs(r.items);
  const auto concepts = r.encoding.concepts();
  r.frontier = estimate_frontier(concepts, listener, frontier_params(config), need);
  r.loss = efficiency_loss(r.cost, r.frontier);
  for (std::size_t i = 0; i < r.encoding.size(); ++i) {
    r.item_losses.push_back(
        item_efficiency_loss(r.items[i].length, r.items[i].surprisal, r.encoding[i].concept_index, r.frontier));
  }
  return r;
}

std::vector<TaxonomyRow> classify_items(const Encoding& encoding, const Inputs& inputs) {
  if (!inputs.taxonomy) throw ValidationError("a taxonomy file is required");
  const auto& graph = *inputs.taxonomy;
  const auto& lexicon = inputs.lexicon;
  std::vector<TaxonomyRow> rows;
  for (const auto& item : encoding.items()) {
    TaxonomyRow row;
    row.item_id = inputs.universe[item.concept_index].id;
    row.surface = item.form.surface;
    row.strategy = item.strategy;
    if (item.strategy == Strategy::kReuse) {
      row.literal = is_literal(item.concept_index, item.form, lexicon, graph);
      row.similarity = nearest_sense_similarity(item.concept_index, item.form.surface, lexicon, graph, inputs.universe);
    } else {
      const std::string head = lexicon.split_head(item.form).second;
      if (lexicon.contains(head)) {
        row.compound_class = classify_compound(item.concept_index, item.form, lexicon, graph);
        row.literal = *row.compound_class == CompoundClass::kEndocentric;
        row.similarity = nearest_sense_similarity(item.concept_index, head, lexicon, graph, inputs.universe);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Output bundle assembled in memory and written in one step.
using Bundle = std::map<std::string, std::string>;

void write_bundle(const Bundle& bundle, const std::filesystem::path& dir) {
  const bool existed = std::filesystem::exists(dir);
  std::vector<std::filesystem::path> written;
  try {
    std::filesystem::create_directories(dir);
    for (const auto& [name, content] : bundle) {
      const auto path = dir / name;
      written.push_back(path);
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      out << content;
      out.flush();
      if (!out) throw Error("cannot write '" + path.string() + "'");
    }
  } catch (...) {
    std::error_code ignored;
    for (const auto& path : written) std::filesystem::remove(path, ignored);
    if (!existed) std::filesystem::remove(dir, ignored);
    throw;
  }
}

std::vector<double> column(const std::vector<EfficiencyLoss>& losses) {
  std::vector<double> out;
  for (const auto& l : losses) out.push_back(l.epsilon);
  return out;
}

}  // namespace

std::vector<std::string> run_pipeline(const AnalysisConfig& config) {
  auto inputs = load_inputs(config, {.encoding = true, .taxonomy = true});
  const auto& universe = inputs->universe;
  const auto& listener = *inputs->listener;

  std::vector<GroupResult> groups;
  Table costs;
  in_stage("costs", [&] {
    append_rows(costs, prefix_column(prefix_column(cost_table(encoding_cost(inputs->encoding, inputs->lexicon, universe,
                                                                            config.need_model, listener.params())),
                                                   "n_items", std::to_string(inputs->encoding.size())),
                                     "group", "all"));
  });
  in_stage("frontier", [&] {
    for (Group g : {Group::kReuse, Group::kCombination}) {
      auto subset = select(inputs->encoding, g);
      if (subset.empty()) continue;
      groups.push_back(analyze(std::string(to_string(g)), std::move(subset), *inputs, config));
    }
    if (groups.empty()) throw ValidationError("encoding has no items");
  });

  Table frontier, labels, losses, item_losses, item_cost_rows;
  for (const auto& g : groups) {
    append_rows(costs, prefix_column(prefix_column(cost_table(g.cost), "n_items", std::to_string(g.encoding.size())),
                                     "group", g.name));
    append_rows(item_cost_rows, prefix_column(item_cost_table(g.encoding, g.items, universe), "group", g.name));
    append_rows(frontier, prefix_column(frontier_table(g.frontier), "group", g.name));
    append_rows(labels, prefix_column(frontier_label_table(g.frontier, universe), "group", g.name));
    append_rows(losses, loss_table(g.name, g.loss));
    append_rows(item_losses, prefix_column(item_loss_table(g.encoding, g.items, g.item_losses, universe), "group", g.name));
  }

  std::vector<std::vector<BaselineSummary>> baselines;
  Table baseline_rows;
  in_stage("baselines", [&] {
    const auto options = baseline_options(config, inputs->antonyms);
    for (const auto& g : groups) {
      auto& summaries = baselines.emplace_back();
      for (BaselineKind kind : {BaselineKind::kNearSynonym, BaselineKind::kRandom}) {
        summaries.push_back(baseline_summary(g.encoding, listener, g.frontier, options, kind));
      }
      auto table = baseline_summary_table(summaries);
      table.header.push_back("attested_loss");
      for (auto& row : table.rows) row.push_back(format_number(g.loss.epsilon));
      append_rows(baseline_rows, prefix_column(table, "group", g.name));
    }
  });

  Table taxonomy;
  std::vector<Comparison> comparisons;
  std::size_t dropped_heads = 0;
  in_stage("taxonomy", [&] {
    const GroupResult* reuse = nullptr;
    const GroupResult* combination = nullptr;
    for (const auto& g : groups) (g.name == "reuse" ? reuse : combination) = &g;

    Comparison strategy_loss{"strategy_loss", "reuse", "combination", {}, {}};
    Comparison strategy_length{"strategy_length", "reuse", "combination", {}, {}};
    Comparison literal{"literalness_loss", "literal", "non_literal", {}, {}};
    Comparison compound{"compound_class_loss", "endocentric", "exocentric", {}, {}};
    if (reuse) {
      strategy_loss.a = column(reuse->item_losses);
      for (const auto& item : reuse->items) strategy_length.a.push_back(item.length);
      const auto rows = classify_items(reuse->encoding, *inputs);
      append_rows(taxonomy, taxonomy_table(rows));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        (*rows[i].literal ? literal.a : literal.b).push_back(reuse->item_losses[i].epsilon);
      }
    }
    if (combination) {
      strategy_loss.b = column(combination->item_losses);
      for (const auto& item : combination->items) strategy_length.b.push_back(item.length);
      const auto rows = classify_items(combination->encoding, *inputs);
      append_rows(taxonomy, taxonomy_table(rows));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].compound_class) continue;
        const bool endo = *rows[i].compound_class == CompoundClass::kEndocentric;
        (endo ? compound.a : compound.b).push_back(combination->item_losses[i].epsilon);
      }
      // Head words of compounds count as additional reuse items, judged
      // against the compound concepts' own frontier.
      const auto heads = augment_reuse_with_heads(combination->encoding, inputs->lexicon);
      dropped_heads = heads.dropped;
      for (const auto& item : heads.encoding.items()) {
        const bool lit = is_literal(item.concept_index, item.form, inputs->lexicon, *inputs->taxonomy);
        const auto loss = item_efficiency_loss(item.form, item.concept_index, combination->frontier, listener);
        (lit ? literal.a : literal.b).push_back(loss.epsilon);
      }
    }
    comparisons = {strategy_loss, strategy_length, literal, compound};
  });

  Table comparison_rows = in_stage("compare", [&] {
    return comparison_table(comparisons, config.bootstrap_resamples, config.seed);
  });

  Bundle bundle;
  bundle["costs.tsv"] = to_tsv(costs);
  bundle["item_costs.tsv"] = to_tsv(item_cost_rows);
  bundle["frontier.tsv"] = to_tsv(frontier);
  bundle["frontier_labels.tsv"] = to_tsv(labels);
  bundle["losses.tsv"] = to_tsv(losses);
  bundle["item_losses.tsv"] = to_tsv(item_losses);
  bundle["baselines.tsv"] = to_tsv(baseline_rows);
  bundle["taxonomy.tsv"] = to_tsv(taxonomy);
  bundle["comparisons.tsv"] = to_tsv(comparison_rows);
  if (config.plot) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      bundle["frontier_" + groups[i].name + ".svg"] =
          frontier_svg(groups[i].name + " encoding", groups[i].frontier, groups[i].cost, baselines[i]);
    }
  }

  in_stage("manifest", [&] {
    nlohmann::ordered_json manifest;
    manifest["tool"] = "lexeff";
    manifest["version"] = kVersion;
    manifest["seed"] = config.seed;
    nlohmann::ordered_json params;
    for (const auto& [key, value] : describe(config)) params[key] = value;
    manifest["parameters"] = params;
    nlohmann::ordered_json files;
    const std::pair<const char*, const std::filesystem::path*> inputs_list[] = {
        {"concepts", &config.concepts}, {"embeddings", &config.embeddings}, {"lexicon", &config.lexicon},
        {"encoding", &config.encoding}, {"taxonomy", &config.taxonomy},     {"antonyms", &config.antonyms}};
    for (const auto& [key, path] : inputs_list) {
      if (path->empty()) continue;
      files[key] = {{"file", path->filename().string()}, {"sha256", sha256_file(*path)}};
    }
    manifest["inputs"] = files;
    std::size_t clamped = 0;
    for (const auto& g : groups) {
      clamped += g.loss.raw < 0.0;
      for (const auto& l : g.item_losses) clamped += l.raw < 0.0;
    }
    manifest["notes"] = {{"head_items_dropped", dropped_heads}, {"clamped_losses", clamped}};
    nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
    for (const auto& [name, content] : bundle) outputs.push_back({{"file", name}, {"sha256", sha256_hex(content)}});
    manifest["outputs"] = outputs;
    bundle["manifest.json"] = manifest.dump(2) + "\n";
  });

  in_stage("write", [&] { write_bundle(bundle, config.output_dir); });
  std::vector<std::string> names;
  for (const auto& [name, content] : bundle) names.push_back(name);
  return names;
}

}  // namespace lexeff::app
