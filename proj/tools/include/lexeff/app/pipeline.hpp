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

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lexeff/app/config.hpp"
#include "lexeff/app/report.hpp"
#include "lexeff/baselines.hpp"
#include "lexeff/error.hpp"
#include "lexeff/frontier.hpp"
#include "lexeff/semantics.hpp"
#include "lexeff/taxonomy.hpp"

namespace lexeff::app {

/// An error tagged with the pipeline stage it came from. Exit code 1 marks
/// bad input, 2 a runtime failure.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message, int exit_code);
  const std::string& stage() const noexcept { return stage_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string stage_;
  int exit_code_;
};

/// Runs `body`, rethrowing any exception as a StageError for `stage`.
template <typename F>
auto in_stage(const std::string& stage, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const ValidationError& e) {
    throw StageError(stage, e.what(), 1);
  } catch (const ParseError& e) {
    throw StageError(stage, e.what(), 1);
  } catch (const std::exception& e) {
    throw StageError(stage, e.what(), 2);
  }
}

struct InputNeeds {
  bool encoding = true;
  bool taxonomy = false;
};

/// Loaded inputs plus the listener built over them. Not movable: the
/// listener refers to the universe and lexicon in place.
struct Inputs {
  Universe universe;
  Lexicon lexicon;
  Encoding encoding;
  std::optional<TaxonomyGraph> taxonomy;
  AntonymSet antonyms;
  std::optional<ListenerModel> listener;

  Inputs() = default;
  Inputs(const Inputs&) = delete;
  Inputs& operator=(const Inputs&) = delete;
};

/// Throws StageError("load", ...).
std::unique_ptr<Inputs> load_inputs(const AnalysisConfig& config, InputNeeds needs);

/// Every problem found in the configured inputs; empty when all is well.
std::vector<std::string> validate(const AnalysisConfig& config);

enum class Group { kAll, kReuse, kCombination };
Group parse_group(const std::string& text);
std::string_view to_string(Group group);
Encoding select(const Encoding& encoding, Group group);

struct GroupResult {
  std::string name;
  Encoding encoding;
  std::vector<ItemCost> items;
  CostPoint cost;
  FrontierResult frontier;
  EfficiencyLoss loss;
  std::vector<EfficiencyLoss> item_losses;
};

FrontierParams frontier_params(const AnalysisConfig& config);
BaselineOptions baseline_options(const AnalysisConfig& config, const AntonymSet& antonyms);

/// Costs, frontier and losses of one encoding under its own need
/// distribution. Throws ValidationError for an empty encoding.
GroupResult analyze(std::string name, Encoding encoding, const Inputs& inputs, const AnalysisConfig& config);

/// Literalness, compound class and nearest-sense similarity per item.
std::vector<TaxonomyRow> classify_items(const Encoding& encoding, const Inputs& inputs);

/// Runs every stage and writes the report bundle into config.output_dir.
/// Returns the written file names, sorted. Nothing is left behind on error.
std::vector<std::string> run_pipeline(const AnalysisConfig& config);

}  // namespace lexeff::app
