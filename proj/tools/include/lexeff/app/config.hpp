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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lexeff/error.hpp"
#include "lexeff/frontier.hpp"
#include "lexeff/lexicon.hpp"

namespace lexeff::app {

/// Raw key=value settings, keyed by canonical (underscore) names.
using ConfigValues = std::map<std::string, std::string>;

/// Every key accepted in a config file or as a flag override.
const std::vector<std::string>& known_config_keys();

/// Reads `key = value` lines; '#' starts a comment. Relative paths are
/// resolved against the file's directory. Throws ValidationError naming the
/// first unknown key.
ConfigValues read_config_file(const std::filesystem::path& path);

struct AnalysisConfig {
  std::filesystem::path concepts;
  std::filesystem::path embeddings;
  std::filesystem::path lexicon;
  std::filesystem::path encoding;
  std::filesystem::path taxonomy;
  std::filesystem::path antonyms;

  double gamma = 10.0;
  std::string beta_grid_spec = "0:10:0.01";
  std::vector<double> beta_grid = default_beta_grid();
  SearchMode search_mode = SearchMode::kGreedy;

  LexiconOptions lexicon_options;
  NeedProductionModel need_model;

  std::size_t k = 5;
  bool respect_word_class = true;
  std::uint64_t replicates = 100000;
  std::uint64_t seed = 0;
  std::size_t bootstrap_resamples = 1000;

  std::size_t threads = 1;
  std::filesystem::path output_dir = "lexeff-out";
  bool plot = false;
};

/// Typed view of the settings. Throws ValidationError naming the offending
/// key for unknown keys or malformed values.
AnalysisConfig build_config(const ConfigValues& values);

/// Canonical key=value rendering of every setting, for the run manifest.
ConfigValues describe(const AnalysisConfig& config);

/// "lo:hi:step" or a comma-separated list of values.
std::vector<double> parse_beta_grid(const std::string& spec);

}  // namespace lexeff::app
