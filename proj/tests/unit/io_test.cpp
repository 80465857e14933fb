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

#include <sstream>

#include <gtest/gtest.h>

#include "lexeff/error.hpp"
#include "lexeff/io.hpp"

namespace lexeff {
namespace {

Universe universe_from(const std::string& concepts, const std::string& embeddings) {
  std::istringstream c(concepts), e(embeddings);
  return parse_universe(c, e);
}

const char* kConcepts =
    R"({"id": "a", "gloss": "first"}
{"id": "b", "gloss": "second", "need_weight": 3}
{"id": "c", "gloss": "third"}
)";
const char* kEmbeddings =
    R"({"id": "a", "vec": [1, 0]}
{"id": "b", "vec": [0, 1]}
{"id": "c", "vec": [1, 1]}
)";

TEST(LoadUniverse, ThreeConceptsTwoDimensions) {
  const auto u = universe_from(kConcepts, kEmbeddings);
  EXPECT_EQ(u.size(), 3u);
  EXPECT_EQ(u.dimension(), 2u);
  EXPECT_EQ(u[1].english_need_weight, 3.0);
  EXPECT_EQ(u.index_of("c"), 2u);
}

TEST(LoadUniverse, LongGlossIsPlainText) {
  const auto u = universe_from(
      R"({"id": "urban renewal sense", "gloss": "the clearing and rebuilding and redeveloping of urban slums"})"
      "\n",
      R"({"id": "urban renewal sense", "vec": [0.3, 0.4]})"
      "\n");
  EXPECT_EQ(u[0].gloss, "the clearing and rebuilding and redeveloping of urban slums");
}

TEST(LoadUniverse, ZeroNormEmbeddingRejected) {
  EXPECT_THROW(universe_from(R"({"id": "z"})"
                             "\n",
                             R"({"id": "z", "vec": [0, 0]})"
                             "\n"),
               ValidationError);
}

TEST(LoadUniverse, StructuralErrors) {
  // missing embedding
  EXPECT_THROW(universe_from(kConcepts, R"({"id": "a", "vec": [1, 0]})"
                                        "\n"),
               Error);
  // duplicate id
  EXPECT_THROW(universe_from(R"({"id": "a"})"
                             "\n"
                             R"({"id": "a"})"
                             "\n",
                             R"({"id": "a", "vec": [1, 0]})"
                             "\n"),
               Error);
  // dimension mismatch
  EXPECT_THROW(universe_from(R"({"id": "a"})"
                             "\n"
                             R"({"id": "b"})"
                             "\n",
                             R"({"id": "a", "vec": [1, 0]})"
                             "\n"
                             R"({"id": "b", "vec": [1, 0, 0]})"
                             "\n"),
               ValidationError);
  // embedding for an unknown id
  EXPECT_THROW(universe_from(R"({"id": "a"})"
                             "\n",
                             R"({"id": "a", "vec": [1, 0]})"
                             "\n"
                             R"({"id": "q", "vec": [1, 0]})"
                             "\n"),
               Error);
}

Universe card_universe() {
  return universe_from(R"({"id": "card-sense"})"
                       "\n"
                       R"({"id": "game-sense"})"
                       "\n",
                       R"({"id": "card-sense", "vec": [1, 0]})"
                       "\n"
                       R"({"id": "game-sense", "vec": [0, 1]})"
                       "\n");
}

Lexicon lexicon_from(const Universe& u, const std::string& text, LexiconOptions options = {}) {
  std::istringstream in(text);
  return parse_lexicon(in, u, options);
}

TEST(LoadLexicon, AcceptsEntry) {
  const auto u = card_universe();
  const auto lex = lexicon_from(u, "surface\tconcept_id\tform_freq\tsense_freq\tword_classes\ncard\tcard-sense\t100\t40\tn\n");
  ASSERT_EQ(lex.entries().size(), 1u);
  EXPECT_EQ(lex.entries()[0].form_frequency, 100.0);
  EXPECT_EQ(lex.entries()[0].sense_frequency, 40.0);
  EXPECT_EQ(lex.form("card").length_units, 4);
}

TEST(LoadLexicon, UnknownConceptRejected) {
  const auto u = card_universe();
  EXPECT_THROW(lexicon_from(u, "surface\tconcept_id\tform_freq\tsense_freq\ncard\tnope\t100\t40\n"), Error);
}

TEST(LoadLexicon, DuplicatePairRejected) {
  const auto u = card_universe();
  EXPECT_THROW(lexicon_from(u, "surface\tconcept_id\tform_freq\tsense_freq\n"
                               "card\tcard-sense\t100\t40\ncard\tcard-sense\t100\t2\n"),
               ValidationError);
}

TEST(LoadLexicon, NegativeFrequencyRejected) {
  const auto u = card_universe();
  EXPECT_THROW(lexicon_from(u, "surface\tconcept_id\tform_freq\tsense_freq\ncard\tcard-sense\t-1\t40\n"), ParseError);
}

TEST(LoadLexicon, ProvidedLengthRequiresColumn) {
  const auto u = card_universe();
  const LexiconOptions provided{' ', HeadPosition::kFinal, LengthMode::kProvided};
  EXPECT_THROW(lexicon_from(u, "surface\tconcept_id\tform_freq\tsense_freq\ncard\tcard-sense\t1\t1\n", provided),
               ParseError);
  const auto lex =
      lexicon_from(u, "surface\tconcept_id\tform_freq\tsense_freq\tlength\ncard\tcard-sense\t1\t1\t3\n", provided);
  EXPECT_EQ(lex.form("card").length_units, 3);
}

TEST(LoadLexicon, RoundTrip) {
  const auto u = card_universe();
  const auto lex = lexicon_from(u,
                                "surface\tconcept_id\tform_freq\tsense_freq\tword_classes\n"
                                "card\tcard-sense\t100\t40\tn\n"
                                "card\tgame-sense\t100\t60\tn,v\n"
                                "déjà\tgame-sense\t7\t7\tadv\n");
  std::ostringstream out;
  write_lexicon(out, lex, u);
  const auto again = lexicon_from(u, out.str());
  ASSERT_EQ(again.entries().size(), lex.entries().size());
  for (std::size_t i = 0; i < lex.entries().size(); ++i) {
    EXPECT_EQ(again.entries()[i].form.surface, lex.entries()[i].form.surface);
    EXPECT_EQ(again.entries()[i].concept_index, lex.entries()[i].concept_index);
    EXPECT_EQ(again.entries()[i].form_frequency, lex.entries()[i].form_frequency);
    EXPECT_EQ(again.entries()[i].sense_frequency, lex.entries()[i].sense_frequency);
    EXPECT_EQ(again.entries()[i].form.length_units, lex.entries()[i].form.length_units);
  }
  EXPECT_EQ(again.form("card").word_classes, lex.form("card").word_classes);
  EXPECT_EQ(again.form("déjà").length_units, 4);

  std::ostringstream twice;
  write_lexicon(twice, again, u);
  EXPECT_EQ(twice.str(), out.str());
}

TEST(ParseEncoding, InfersConstituentsAndLengths) {
  const auto u = universe_from(R"({"id": "x"})"
                               "\n"
                               R"({"id": "y"})"
                               "\n"
                               R"({"id": "new1"})"
                               "\n"
                               R"({"id": "new2"})"
                               "\n",
                               R"({"id": "x", "vec": [1, 0]})"
                               "\n"
                               R"({"id": "y", "vec": [0, 1]})"
                               "\n"
                               R"({"id": "new1", "vec": [1, 2]})"
                               "\n"
                               R"({"id": "new2", "vec": [2, 1]})"
                               "\n");
  const auto lex = lexicon_from(u, "surface\tconcept_id\tform_freq\tsense_freq\nbirth\tx\t5\t5\ncard\ty\t9\t9\n");
  std::istringstream in("concept_id\tsurface\tstrategy\tform_freq\n"
                        "new1\tcard\tR\tNA\n"
                        "new2\tbirth card\tC\t3\n");
  const auto enc = parse_encoding(in, u, lex);
  ASSERT_EQ(enc.size(), 2u);
  EXPECT_EQ(enc[0].form.constituents, std::vector<std::string>{"card"});
  EXPECT_FALSE(enc[0].form_frequency.has_value());
  EXPECT_EQ(enc[1].form.constituents, (std::vector<std::string>{"birth", "card"}));
  EXPECT_EQ(enc[1].form.length_units, 10);
  EXPECT_EQ(enc[1].strategy, Strategy::kCombination);
  EXPECT_EQ(enc[1].form_frequency, 3.0);
}

TEST(TsvTable, MissingColumnNamesIt) {
  std::istringstream in("a\tb\n1\t2\n");
  const auto t = TsvTable::parse(in, "t.tsv");
  try {
    t.require("zzz");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("zzz"), std::string::npos);
  }
  EXPECT_EQ(t.number(0, "b"), 2.0);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(3.0), "3");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace lexeff
