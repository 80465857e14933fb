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

#include "lexeff/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "lexeff/error.hpp"

namespace lexeff {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return in;
}

std::string join(const std::vector<std::string>& parts, char delimiter) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(delimiter);
    out += parts[i];
  }
  return out;
}

template <typename Container>
std::string join(const Container& parts, char delimiter) {
  return join(std::vector<std::string>(parts.begin(), parts.end()), delimiter);
}

std::set<std::string> parse_word_classes(std::string_view text) {
  std::set<std::string> out;
  for (const auto& part : split(text, ',')) {
    auto t = trim(part);
    if (!t.empty()) out.emplace(t);
  }
  return out;
}

std::vector<std::string> parse_constituents(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& part : split(text, '|')) out.emplace_back(trim(part));
  return out;
}

bool getline_clean(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

std::vector<std::string> split(std::string_view text, char delimiter) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(delimiter, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::string format_number(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

TsvTable TsvTable::parse(std::istream& in, std::string source) {
  TsvTable table;
  table.source_ = std::move(source);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (getline_clean(in, line)) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    auto cells = split(line, '\t');
    if (!have_header) {
      for (auto& cell : cells) cell = std::string(trim(cell));
      table.header_ = std::move(cells);
      have_header = true;
      continue;
    }
    table.rows_.push_back(std::move(cells));
    table.lines_.push_back(line_no);
  }
  if (!have_header) throw ParseError(table.source_, 0, "missing header row");
  return table;
}

TsvTable TsvTable::load(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse(in, path.string());
}

bool TsvTable::has_column(std::string_view name) const {
  return std::find(header_.begin(), header_.end(), name) != header_.end();
}

void TsvTable::require(std::string_view name) const {
  if (!has_column(name)) throw ParseError(source_, 0, "missing column '" + std::string(name) + "'");
}

std::string_view TsvTable::cell(std::size_t row, std::string_view name) const {
  auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) return {};
  auto col = static_cast<std::size_t>(it - header_.begin());
  const auto& cells = rows_[row];
  if (col >= cells.size()) return {};
  return trim(cells[col]);
}

double TsvTable::number(std::size_t row, std::string_view name) const {
  auto value = optional_number(row, name);
  if (!value) throw ParseError(source_, lines_[row], "missing value for '" + std::string(name) + "'");
  return *value;
}

std::optional<double> TsvTable::optional_number(std::size_t row, std::string_view name) const {
  std::string_view text = cell(row, name);
  if (text.empty() || text == "NA") return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(source_, lines_[row], "malformed number '" + std::string(text) + "' in column '" +
                                               std::string(name) + "'");
  }
  return value;
}

Universe parse_universe(std::istream& concepts_in, std::istream& embeddings_in,
                        const std::string& concepts_source, const std::string& embeddings_source) {
  using nlohmann::json;
  std::vector<Concept> concepts;
  std::unordered_map<std::string, std::size_t> position;
  std::string line;
  std::size_t line_no = 0;
  while (getline_clean(concepts_in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      json record = json::parse(line);
      Concept c;
      c.id = record.at("id").get<std::string>();
      c.gloss = record.value("gloss", std::string());
      c.english_need_weight = record.value("need_weight", 1.0);
      if (!position.emplace(c.id, concepts.size()).second) {
        throw ParseError(concepts_source, line_no, "duplicate concept id '" + c.id + "'");
      }
      concepts.push_back(std::move(c));
    } catch (const json::exception& e) {
      throw ParseError(concepts_source, line_no, e.what());
    }
  }

  std::vector<bool> seen(concepts.size(), false);
  line_no = 0;
  while (getline_clean(embeddings_in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      json record = json::parse(line);
      auto id = record.at("id").get<std::string>();
      auto it = position.find(id);
      if (it == position.end()) throw ParseError(embeddings_source, line_no, "embedding for unknown concept '" + id + "'");
      if (seen[it->second]) throw ParseError(embeddings_source, line_no, "duplicate embedding for '" + id + "'");
      seen[it->second] = true;
      concepts[it->second].embedding = record.at("vec").get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw ParseError(embeddings_source, line_no, e.what());
    }
  }
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (!seen[i]) throw ValidationError("missing embedding for concept '" + concepts[i].id + "'");
  }
  return Universe(std::move(concepts));
}

Universe load_universe(const std::filesystem::path& concepts_path,
                       const std::filesystem::path& embeddings_path) {
  auto concepts = open_input(concepts_path);
  auto embeddings = open_input(embeddings_path);
  return parse_universe(concepts, embeddings, concepts_path.string(), embeddings_path.string());
}

Lexicon parse_lexicon(std::istream& in, const Universe& universe, const LexiconOptions& options,
                      const std::string& source) {
  TsvTable table = TsvTable::parse(in, source);
  for (auto column : {"surface", "concept_id", "form_freq", "sense_freq"}) table.require(column);
  if (options.length_mode == LengthMode::kProvided) table.require("length");

  std::vector<LexiconEntry> entries;
  entries.reserve(table.rows());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    LexiconEntry entry;
    entry.form.surface = std::string(table.cell(r, "surface"));
    if (entry.form.surface.empty()) throw ParseError(source, table.line(r), "empty surface");
    auto cid = table.cell(r, "concept_id");
    auto concept_index = universe.find(cid);
    if (!concept_index) throw ParseError(source, table.line(r), "unknown concept id '" + std::string(cid) + "'");
    entry.concept_index = *concept_index;
    entry.form_frequency = table.number(r, "form_freq");
    entry.sense_frequency = table.number(r, "sense_freq");
    if (entry.form_frequency < 0.0 || entry.sense_frequency < 0.0) {
      throw ParseError(source, table.line(r), "negative frequency");
    }
    entry.form.word_classes = parse_word_classes(table.cell(r, "word_classes"));
    auto constituents = table.cell(r, "constituents");
    entry.form.constituents =
        constituents.empty() ? std::vector<std::string>{entry.form.surface} : parse_constituents(constituents);
    if (entry.form.constituents.size() > 2) {
      throw ParseError(source, table.line(r), "forms may have at most two constituents");
    }
    if (options.length_mode == LengthMode::kProvided) {
      double length = table.number(r, "length");
      if (length < 1.0 || length != std::floor(length)) {
        throw ParseError(source, table.line(r), "length must be a positive integer");
      }
      entry.form.length_units = static_cast<int>(length);
    } else {
      entry.form.length_units = static_cast<int>(utf8_length(entry.form.surface));
    }
    entries.push_back(std::move(entry));
  }
  try {
    return Lexicon(std::move(entries), universe, options);
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

Lexicon load_lexicon(const std::filesystem::path& path, const Universe& universe, const LexiconOptions& options) {
  auto in = open_input(path);
  return parse_lexicon(in, universe, options, path.string());
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon, const Universe& universe) {
  out << "surface\tconcept_id\tform_freq\tsense_freq\tword_classes\tconstituents\tlength\n";
  for (const auto& e : lexicon.entries()) {
    out << e.form.surface << '\t' << universe[e.concept_index].id << '\t' << format_number(e.form_frequency) << '\t'
        << format_number(e.sense_frequency) << '\t' << join(e.form.word_classes, ',') << '\t'
        << join(e.form.constituents, '|') << '\t' << e.form.length_units << '\n';
  }
}

Encoding parse_encoding(std::istream& in, const Universe& universe, const Lexicon& lexicon,
                        const std::string& source) {
  TsvTable table = TsvTable::parse(in, source);
  for (auto column : {"concept_id", "surface", "strategy"}) table.require(column);

  std::vector<EncodingItem> items;
  items.reserve(table.rows());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const std::size_t line = table.line(r);
    EncodingItem item;
    auto cid = table.cell(r, "concept_id");
    auto concept_index = universe.find(cid);
    if (!concept_index) throw ParseError(source, line, "unknown concept id '" + std::string(cid) + "'");
    item.concept_index = *concept_index;

    auto strategy = table.cell(r, "strategy");
    if (strategy == "R" || strategy == "reuse") {
      item.strategy = Strategy::kReuse;
    } else if (strategy == "C" || strategy == "combination") {
      item.strategy = Strategy::kCombination;
    } else {
      throw ParseError(source, line, "strategy must be R or C, got '" + std::string(strategy) + "'");
    }

    Form& form = item.form;
    form.surface = std::string(table.cell(r, "surface"));
    if (form.surface.empty()) throw ParseError(source, line, "empty surface");
    const bool in_lexicon = lexicon.contains(form.surface);
    auto constituents = table.cell(r, "constituents");
    if (!constituents.empty()) {
      form.constituents = parse_constituents(constituents);
    } else if (in_lexicon) {
      form.constituents = lexicon.form(form.surface).constituents;
    } else if (item.strategy == Strategy::kCombination) {
      form.constituents = split(form.surface, lexicon.separator());
    } else {
      form.constituents = {form.surface};
    }
    if (form.constituents.empty() || form.constituents.size() > 2) {
      throw ParseError(source, line, "form '" + form.surface + "' must have one or two constituents");
    }
    if (item.strategy == Strategy::kCombination && form.constituents.size() != 2) {
      throw ParseError(source, line, "combination '" + form.surface + "' must have exactly two constituents");
    }

    if (in_lexicon && item.strategy == Strategy::kReuse) {
      form.word_classes = lexicon.form(form.surface).word_classes;
    } else if (form.constituents.size() == 2) {
      auto [modifier, head] = lexicon.split_head(form);
      if (lexicon.contains(head)) form.word_classes = lexicon.form(head).word_classes;
    }

    if (lexicon.length_mode() == LengthMode::kOrthographic) {
      form.length_units = static_cast<int>(utf8_length(form.surface));
    } else if (auto length = table.optional_number(r, "length")) {
      if (*length < 1.0 || *length != std::floor(*length)) throw ParseError(source, line, "length must be a positive integer");
      form.length_units = static_cast<int>(*length);
    } else if (in_lexicon) {
      form.length_units = lexicon.form(form.surface).length_units;
    } else {
      int total = 0;
      for (const auto& c : form.constituents) {
        if (!lexicon.contains(c)) throw ParseError(source, line, "no length for '" + form.surface + "'");
        total += lexicon.form(c).length_units;
      }
      form.length_units = total;
    }

    item.form_frequency = table.optional_number(r, "form_freq");
    item.sense_frequency = table.optional_number(r, "sense_freq");
    if (item.form_frequency.value_or(0.0) < 0.0 || item.sense_frequency.value_or(0.0) < 0.0) {
      throw ParseError(source, line, "negative frequency");
    }
    items.push_back(std::move(item));
  }
  try {
    return Encoding(std::move(items));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

Encoding load_encoding(const std::filesystem::path& path, const Universe& universe, const Lexicon& lexicon) {
  auto in = open_input(path);
  Encoding encoding = parse_encoding(in, universe, lexicon, path.string());
  auto problems = check_encoding(encoding, lexicon, universe);
  if (!problems.empty()) throw ValidationError(path.string() + ": " + problems.front());
  return encoding;
}

void write_encoding(std::ostream& out, const Encoding& encoding, const Universe& universe) {
  out << "concept_id\tsurface\tconstituents\tstrategy\tlength\n";
  for (const auto& item : encoding.items()) {
    out << universe[item.concept_index].id << '\t' << item.form.surface << '\t' << join(item.form.constituents, '|')
        << '\t' << (item.strategy == Strategy::kReuse ? 'R' : 'C') << '\t' << item.form.length_units << '\n';
  }
}

}  // namespace lexeff
