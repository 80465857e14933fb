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

#include "lexeff/app/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "lexeff/io.hpp"

namespace lexeff::app {

namespace {

const std::vector<std::string> kPathKeys = {"concepts", "embeddings", "lexicon", "encoding", "taxonomy", "antonyms",
                                            "output_dir"};

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& expected) {
  throw ValidationError("config key '" + key + "': invalid value '" + value + "' (expected " + expected + ")");
}

double to_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad_value(key, value, "a number");
  return out;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad_value(key, value, "a non-negative integer");
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "off" || value == "no") return false;
  bad_value(key, value, "true or false");
}

}  // namespace

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = {
      "concepts",    "embeddings",  "lexicon",      "encoding", "taxonomy",           "antonyms",
      "gamma",       "beta_grid",   "search",       "separator", "head_position",     "length_mode",
      "need_mode",   "smoothing",   "k",            "respect_word_class", "replicates", "seed",
      "bootstrap_resamples", "threads", "output_dir", "plot"};
  return keys;
}

ConfigValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open config file");
  const auto base = path.parent_path();
  const auto& keys = known_config_keys();
  ConfigValues values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto text = trim(line);
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError(path.string(), line_no, "expected key = value");
    std::string key(trim(text.substr(0, eq)));
    std::replace(key.begin(), key.end(), '-', '_');
    std::string value(trim(text.substr(eq + 1)));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": unknown config key '" + key + "'");
    }
    if (std::find(kPathKeys.begin(), kPathKeys.end(), key) != kPathKeys.end() && !value.empty() &&
        std::filesystem::path(value).is_relative()) {
      value = (base / value).lexically_normal().string();
    }
    values[key] = value;
  }
  return values;
}

std::vector<double> parse_beta_grid(const std::string& spec) {
  if (spec.find(':') != std::string::npos) {
    auto parts = split(spec, ':');
    if (parts.size() != 3) bad_value("beta_grid", spec, "lo:hi:step");
    const double lo = to_double("beta_grid", std::string(trim(parts[0])));
    const double hi = to_double("beta_grid", std::string(trim(parts[1])));
    const double step = to_double("beta_grid", std::string(trim(parts[2])));
    if (lo == 0.0 && hi == 10.0 && step == 0.01) return default_beta_grid();
    return make_beta_grid(lo, hi, step);
  }
  std::vector<double> grid;
  for (const auto& part : split(spec, ',')) grid.push_back(to_double("beta_grid", std::string(trim(part))));
  validate_beta_grid(grid);
  return grid;
}

AnalysisConfig build_config(const ConfigValues& values) {
  const auto& keys = known_config_keys();
  AnalysisConfig config;
  for (const auto& [key, value] : values) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ValidationError("unknown config key '" + key + "'");
    }
    if (key == "concepts") config.concepts = value;
    else if (key == "embeddings") config.embeddings = value;
    else if (key == "lexicon") config.lexicon = value;
    else if (key == "encoding") config.encoding = value;
    else if (key == "taxonomy") config.taxonomy = value;
    else if (key == "antonyms") config.antonyms = value;
    else if (key == "output_dir") config.output_dir = value;
    else if (key == "gamma") {
      config.gamma = to_double(key, value);
      if (!(config.gamma >= 0.0)) bad_value(key, value, "a non-negative number");
    } else if (key == "beta_grid") {
      try {
        config.beta_grid = parse_beta_grid(value);
      } catch (const ValidationError& e) {
        bad_value(key, value, "lo:hi:step or a list of increasing non-negative values");
      }
      config.beta_grid_spec = value;
    } else if (key == "search") {
      if (value == "greedy") config.search_mode = SearchMode::kGreedy;
      else if (value == "exhaustive") config.search_mode = SearchMode::kExhaustive;
      else bad_value(key, value, "greedy or exhaustive");
    } else if (key == "separator") {
      if (value == "space" || value.empty()) config.lexicon_options.separator = ' ';
      else if (value == "hyphen") config.lexicon_options.separator = '-';
      else if (value == "none") bad_value(key, value, "a single printable ASCII character");
      else if (value.size() == 1 && static_cast<unsigned char>(value[0]) < 0x80) config.lexicon_options.separator = value[0];
      else bad_value(key, value, "space, hyphen, or a single ASCII character");
    } else if (key == "head_position") {
      if (value == "final") config.lexicon_options.head_position = HeadPosition::kFinal;
      else if (value == "initial") config.lexicon_options.head_position = HeadPosition::kInitial;
      else bad_value(key, value, "final or initial");
    } else if (key == "length_mode") {
      if (value == "orthographic") config.lexicon_options.length_mode = LengthMode::kOrthographic;
      else if (value == "provided") config.lexicon_options.length_mode = LengthMode::kProvided;
      else bad_value(key, value, "orthographic or provided");
    } else if (key == "need_mode") {
      if (value == "corpus") config.need_model.mode = NeedMode::kCorpus;
      else if (value == "relabeled") config.need_model.mode = NeedMode::kRelabeled;
      else bad_value(key, value, "corpus or relabeled");
    } else if (key == "smoothing") config.need_model.smoothing = to_bool(key, value);
    else if (key == "k") {
      config.k = to_unsigned(key, value);
      if (config.k == 0) bad_value(key, value, "an integer >= 1");
    } else if (key == "respect_word_class") config.respect_word_class = to_bool(key, value);
    else if (key == "replicates") {
      config.replicates = to_unsigned(key, value);
      if (config.replicates == 0) bad_value(key, value, "an integer >= 1");
    } else if (key == "seed") config.seed = to_unsigned(key, value);
    else if (key == "bootstrap_resamples") {
      config.bootstrap_resamples = to_unsigned(key, value);
      if (config.bootstrap_resamples == 0) bad_value(key, value, "an integer >= 1");
    } else if (key == "threads") {
      config.threads = to_unsigned(key, value);
      if (config.threads == 0) bad_value(key, value, "an integer >= 1");
    } else if (key == "plot") config.plot = to_bool(key, value);
  }
  return config;
}

ConfigValues describe(const AnalysisConfig& c) {
  ConfigValues v;
  auto name = [](const std::filesystem::path& p) { return p.empty() ? std::string() : p.filename().string(); };
  v["concepts"] = name(c.concepts);
  v["embeddings"] = name(c.embeddings);
  v["lexicon"] = name(c.lexicon);
  v["encoding"] = name(c.encoding);
  v["taxonomy"] = name(c.taxonomy);
  v["antonyms"] = name(c.antonyms);
  v["gamma"] = format_number(c.gamma);
  v["beta_grid"] = c.beta_grid_spec;
  v["search"] = c.search_mode == SearchMode::kGreedy ? "greedy" : "exhaustive";
  v["separator"] = c.lexicon_options.separator == ' ' ? "space" : std::string(1, c.lexicon_options.separator);
  v["head_position"] = c.lexicon_options.head_position == HeadPosition::kFinal ? "final" : "initial";
  v["length_mode"] = c.lexicon_options.length_mode == LengthMode::kOrthographic ? "orthographic" : "provided";
  v["need_mode"] = c.need_model.mode == NeedMode::kCorpus ? "corpus" : "relabeled";
  v["smoothing"] = c.need_model.smoothing ? "true" : "false";
  v["k"] = std::to_string(c.k);
  v["respect_word_class"] = c.respect_word_class ? "true" : "false";
  v["replicates"] = std::to_string(c.replicates);
  v["seed"] = std::to_string(c.seed);
  v["bootstrap_resamples"] = std::to_string(c.bootstrap_resamples);
  v["plot"] = c.plot ? "true" : "false";
  // threads and output_dir do not affect results and are left out so that
  // manifests compare equal across machines.
  return v;
}

}  // namespace lexeff::app
