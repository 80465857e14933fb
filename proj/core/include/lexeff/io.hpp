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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexeff/lexicon.hpp"

namespace lexeff {

/// A tab-separated table with a header row. Blank lines and lines starting
/// with '#' are skipped.
class TsvTable {
 public:
  static TsvTable parse(std::istream& in, std::string source);
  static TsvTable load(const std::filesystem::path& path);

  const std::string& source() const noexcept { return source_; }
  const std::vector<std::string>& header() const noexcept { return header_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  /// 1-based line number of a row in the source.
  std::size_t line(std::size_t row) const { return lines_[row]; }

  bool has_column(std::string_view name) const;
  /// Throws ParseError when the column is missing.
  void require(std::string_view name) const;

  /// Cell text; empty when the column is absent or the row is short.
  std::string_view cell(std::size_t row, std::string_view name) const;
  /// Parses a real-valued cell. Throws ParseError when malformed.
  double number(std::size_t row, std::string_view name) const;
  std::optional<double> optional_number(std::size_t row, std::string_view name) const;

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::size_t> lines_;
};

std::vector<std::string> split(std::string_view text, char delimiter);
std::string_view trim(std::string_view text);
/// Shortest decimal text that round-trips the value.
std::string format_number(double value);

Universe parse_universe(std::istream& concepts, std::istream& embeddings,
                        const std::string& concepts_source = "concepts",
                        const std::string& embeddings_source = "embeddings");
Universe load_universe(const std::filesystem::path& concepts_path,
                       const std::filesystem::path& embeddings_path);

/// Columns: surface, concept_id, form_freq, sense_freq, word_classes
/// (comma-separated), constituents (pipe-separated, optional), length
/// (required in provided length mode).
Lexicon parse_lexicon(std::istream& in, const Universe& universe, const LexiconOptions& options,
                      const std::string& source = "lexicon");
Lexicon load_lexicon(const std::filesystem::path& path, const Universe& universe,
                     const LexiconOptions& options);
void write_lexicon(std::ostream& out, const Lexicon& lexicon, const Universe& universe);

/// Columns: concept_id, surface, constituents (pipe-separated), strategy
/// (R|C); optional form_freq, sense_freq, length. Does not check that
/// constituents resolve in the lexicon; see check_encoding.
Encoding parse_encoding(std::istream& in, const Universe& universe, const Lexicon& lexicon,
                        const std::string& source = "encoding");
/// Parses and checks the encoding, throwing ValidationError on the first
/// unresolved constituent.
Encoding load_encoding(const std::filesystem::path& path, const Universe& universe,
                       const Lexicon& lexicon);
void write_encoding(std::ostream& out, const Encoding& encoding, const Universe& universe);

}  // namespace lexeff
