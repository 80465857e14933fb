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

// lexeff command-line entry point.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lexeff/app/config.hpp"
#include "lexeff/app/pipeline.hpp"
#include "lexeff/app/report.hpp"
#include "lexeff/version.hpp"

namespace {

using namespace lexeff;
using namespace lexeff::app;

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kRuntime = 2;

// Config file path plus per-key flag overrides shared by the analysis
// subcommands.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, std::vector<CLI::Option*>> options;
  bool plot = false;
  CLI::Option* plot_flag = nullptr;
};

void add_config_flags(CLI::App& cmd, ConfigFlags& flags, bool with_run_keys) {
  cmd.add_option("--config", flags.config_path, "key=value configuration file");
  for (const auto& key : known_config_keys()) {
    if (key == "plot") continue;
    if (!with_run_keys && key == "output_dir") continue;
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    flags.options[key].push_back(cmd.add_option(flag, flags.values[key], "override config key '" + key + "'"));
  }
  if (with_run_keys) flags.plot_flag = cmd.add_flag("--plot", flags.plot, "also write SVG frontier plots");
}

AnalysisConfig resolve(const ConfigFlags& flags) {
  ConfigValues values;
  if (!flags.config_path.empty()) values = read_config_file(flags.config_path);
  // Every subcommand registers its own copy of each flag; at most one runs.
  for (const auto& [key, options] : flags.options) {
    for (const auto* option : options) {
      if (option->count() > 0) values[key] = flags.values.at(key);
    }
  }
  if (flags.plot_flag && flags.plot_flag->count() > 0) values["plot"] = "true";
  return build_config(values);
}

// Writes to `path`, or to stdout when empty or "-".
void emit(const Table& table, const std::string& path) {
  if (path.empty() || path == "-") {
    write_tsv(std::cout, table);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  write_tsv(out, table);
  if (!out.flush()) throw Error("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicalization efficiency analysis"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  ConfigFlags flags;
  std::string out, items_out, labels_out, dump, strategy = "all", kind = "both";

  auto* validate_cmd = app.add_subcommand("validate", "Check input files and configuration");
  add_config_flags(*validate_cmd, flags, false);

  auto* costs_cmd = app.add_subcommand("costs", "Expected length and information loss of an encoding");
  add_config_flags(*costs_cmd, flags, false);
  costs_cmd->add_option("--out", out, "summary TSV (default stdout)");
  costs_cmd->add_option("--items-out", items_out, "per-item TSV");

  auto* frontier_cmd = app.add_subcommand("frontier", "Optimal encodings across the beta grid");
  add_config_flags(*frontier_cmd, flags, false);
  frontier_cmd->add_option("--strategy", strategy, "all, reuse or combination");
  frontier_cmd->add_option("--out", out, "frontier TSV (default stdout)");
  frontier_cmd->add_option("--labels-out", labels_out, "optimal labels per beta");

  auto* loss_cmd = app.add_subcommand("loss", "Efficiency loss of an encoding and its items");
  add_config_flags(*loss_cmd, flags, false);
  loss_cmd->add_option("--strategy", strategy, "all, reuse or combination");
  loss_cmd->add_option("--out", out, "encoding-level TSV (default stdout)");
  loss_cmd->add_option("--items-out", items_out, "per-item TSV");

  auto* baselines_cmd = app.add_subcommand("baselines", "Near-synonym and random replicate baselines");
  add_config_flags(*baselines_cmd, flags, false);
  baselines_cmd->add_option("--strategy", strategy, "all, reuse or combination");
  baselines_cmd->add_option("--kind", kind, "near-synonym, random or both")
      ->check(CLI::IsMember({"near-synonym", "random", "both"}));
  baselines_cmd->add_option("--out", out, "summary TSV (default stdout)");
  baselines_cmd->add_option("--dump", dump, "per-replicate TSV");

  auto* taxonomy_cmd = app.add_subcommand("taxonomy", "Literalness and compound classes of encoding items");
  add_config_flags(*taxonomy_cmd, flags, false);
  taxonomy_cmd->add_option("--out", out, "per-item TSV (default stdout)");

  std::string file_a, file_b, column = "epsilon", label_a = "a", label_b = "b";
  std::size_t resamples = 1000;
  std::uint64_t seed = 0;
  auto* compare_cmd = app.add_subcommand("compare", "Pooled t-test and bootstrap CIs for two item tables");
  compare_cmd->add_option("file_a", file_a, "first TSV")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("file_b", file_b, "second TSV")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("--column", column, "numeric column to compare");
  compare_cmd->add_option("--label-a", label_a);
  compare_cmd->add_option("--label-b", label_b);
  compare_cmd->add_option("--bootstrap-resamples", resamples)->check(CLI::PositiveNumber);
  compare_cmd->add_option("--seed", seed);
  compare_cmd->add_option("--out", out, "result TSV (default stdout)");

  auto* run_cmd = app.add_subcommand("run", "Full analysis into an output directory");
  add_config_flags(*run_cmd, flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }

  try {
    if (compare_cmd->parsed()) {
      Comparison c{column, label_a, label_b, read_column(file_a, column), read_column(file_b, column)};
      emit(comparison_table({c}, resamples, seed), out);
      return kOk;
    }

    const AnalysisConfig config = resolve(flags);

    if (validate_cmd->parsed()) {
      const auto problems = validate(config);
      for (const auto& p : problems) std::cerr << p << '\n';
      if (!problems.empty()) return kValidation;
      std::cout << "ok\n";
      return kOk;
    }
    if (run_cmd->parsed()) {
      for (const auto& name : run_pipeline(config)) std::cout << (config.output_dir / name).string() << '\n';
      return kOk;
    }

    const auto inputs = load_inputs(config, {.encoding = true, .taxonomy = taxonomy_cmd->parsed()});
    const auto& universe = inputs->universe;

    if (costs_cmd->parsed()) {
      const auto need = need_marginal(inputs->encoding, inputs->lexicon, universe, config.need_model);
      const auto items = in_stage("costs", [&] { return item_costs(inputs->encoding, *inputs->listener, need); });
      emit(cost_table(combine_costs(items)), out);
      if (!items_out.empty()) emit(item_cost_table(inputs->encoding, items, universe), items_out);
      return kOk;
    }
    if (taxonomy_cmd->parsed()) {
      emit(taxonomy_table(in_stage("taxonomy", [&] { return classify_items(inputs->encoding, *inputs); })), out);
      return kOk;
    }

    const Group group = parse_group(strategy);
    const auto result = in_stage("frontier", [&] {
      return analyze(std::string(to_string(group)), select(inputs->encoding, group), *inputs, config);
    });
    if (frontier_cmd->parsed()) {
      emit(frontier_table(result.frontier), out);
      if (!labels_out.empty()) emit(frontier_label_table(result.frontier, universe), labels_out);
    } else if (loss_cmd->parsed()) {
      emit(loss_table(result.name, result.loss), out);
      if (!items_out.empty()) emit(item_loss_table(result.encoding, result.items, result.item_losses, universe), items_out);
    } else if (baselines_cmd->parsed()) {
      std::vector<BaselineSummary> summaries;
      in_stage("baselines", [&] {
        const auto options = baseline_options(config, inputs->antonyms);
        for (auto k : {BaselineKind::kNearSynonym, BaselineKind::kRandom}) {
          if (kind != "both" && kind != to_string(k)) continue;
          summaries.push_back(baseline_summary(result.encoding, *inputs->listener, result.frontier, options, k));
        }
      });
      emit(baseline_summary_table(summaries), out);
      if (!dump.empty()) {
        Table table;
        for (const auto& s : summaries) append_rows(table, baseline_dump_table(s));
        emit(table, dump);
      }
    }
    return kOk;
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
}
