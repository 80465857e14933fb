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

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "builders.hpp"
#include "lexeff/error.hpp"
#include "lexeff/semantics.hpp"
#include "oracle.hpp"

namespace lexeff {
namespace {

using testing::make_lexicon;
using testing::make_universe;

TEST(CosineDistance, HandValues) {
  const std::vector<double> x{1, 0}, y{0, 1}, xy{1, 1}, zero{0, 0};
  EXPECT_EQ(cosine_distance(x, x), 0.0);
  EXPECT_DOUBLE_EQ(cosine_distance(x, y), 1.0);
  EXPECT_NEAR(cosine_distance(x, xy), 1.0 - 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(cosine_distance(x, xy), 0.29289, 1e-5);
  EXPECT_THROW(cosine_distance(x, zero), ValidationError);
}

TEST(Prototype, SingleSenseIsTheEmbedding) {
  auto u = make_universe({{"a", {0.3, 0.7}}, {"b", {1, 0}}});
  const auto lex = make_lexicon(u, {{"w", "a", 10, 4}});
  EXPECT_EQ(prototype(lex.form("w"), lex, u).vector, (std::vector<double>{0.3, 0.7}));
}

TEST(Prototype, EqualSensesAverage) {
  auto u = make_universe({{"a", {1, 0}}, {"b", {0, 1}}});
  const auto lex = make_lexicon(u, {{"w", "a", 10, 5}, {"w", "b", 10, 5}});
  EXPECT_EQ(prototype(lex.form("w"), lex, u).vector, (std::vector<double>{0.5, 0.5}));
}

TEST(Prototype, CombinationAdds) {
  auto u = make_universe({{"a", {1, 0}}, {"b", {0, 1}}});
  const auto lex = make_lexicon(u, {{"x", "a"}, {"y", "b"}});
  EXPECT_EQ(prototype(lex.combine("x", "y"), lex, u).vector, (std::vector<double>{1, 1}));
  EXPECT_THROW(prototype(Form{"zz", {"zz"}, 2, {}}, lex, u), ValidationError);
}

TEST(Prototype, SmoothedSenseWeights) {
  auto u = make_universe({{"a", {1, 0}}, {"b", {0, 1}}});
  const auto lex = make_lexicon(u, {{"w", "a", 10, 2}, {"w", "b", 10, 0}});
  // add-one: 3 and 1
  const auto q = prototype(lex.form("w"), lex, u).vector;
  EXPECT_DOUBLE_EQ(q[0], 0.75);
  EXPECT_DOUBLE_EQ(q[1], 0.25);
}

class SoftmaxExample : public ::testing::Test {
 protected:
  Universe u = make_universe({{"c1", {1, 0}}, {"c2", {0, 1}}, {"c3", {1, 1}}});
  Lexicon lex = make_lexicon(u, {{"x", "c1"}});
  ListenerModel listener{lex, u, {10.0}};

  // Independent oracle: the hand softmax over e^0, e^-10, e^-10(1 - 1/sqrt 2).
  std::vector<double> expected() const {
    const double d3 = 1.0 - 1.0 / std::sqrt(2.0);
    const std::vector<double> raw{1.0, std::exp(-10.0), std::exp(-10.0 * d3)};
    const double z = raw[0] + raw[1] + raw[2];
    return {raw[0] / z, raw[1] / z, raw[2] / z};
  }
};

TEST_F(SoftmaxExample, HandSoftmax) {
  const auto p = listener_distribution(lex.form("x"), lex, u, {10.0});
  const auto want = expected();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(p[i], want[i], 1e-15);
}

TEST_F(SoftmaxExample, HandSurprisal) {
  EXPECT_NEAR(listener.surprisal(lex.form("x"), 0), -std::log2(expected()[0]), 1e-12);
}

TEST(Listener, ZeroGammaIsUniform) {
  auto u = make_universe({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {1, 1}}, {"d", {-1, 2}}});
  const auto lex = make_lexicon(u, {{"x", "a"}, {"y", "d"}});
  for (const char* w : {"x", "y"}) {
    const auto p = listener_distribution(lex.form(w), lex, u, {0.0});
    for (double x : p) EXPECT_EQ(x, 0.25);
  }
  ListenerModel listener(lex, u, {0.0});
  for (ConceptIndex c = 0; c < 4; ++c) EXPECT_EQ(listener.surprisal(lex.form("y"), c), 2.0);
}

TEST(Listener, UniverseOfOneIsCertain) {
  auto u = make_universe({{"a", {1, 0}}});
  const auto lex = make_lexicon(u, {{"x", "a"}});
  ListenerModel listener(lex, u, {10.0});
  EXPECT_EQ(listener.surprisal(lex.form("x"), 0), 0.0);
}

TEST(Listener, ShiftInvariance) {
  const std::vector<double> d{0.1, 0.5, 0.7, 1.9};
  std::vector<double> shifted = d;
  for (double& x : shifted) x += 0.37;
  const auto p = softmax_of_distances(d, 10.0);
  const auto q = softmax_of_distances(shifted, 10.0);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_LT(std::fabs(p[i] - q[i]), 1e-12);
}

TEST(Listener, RejectsBadGamma) {
  auto u = make_universe({{"a", {1, 0}}});
  const auto lex = make_lexicon(u, {{"x", "a"}});
  EXPECT_THROW(ListenerModel(lex, u, {-1.0}), ValidationError);
  EXPECT_THROW(ListenerModel(lex, u, {std::nan("")}), ValidationError);
}

// Properties over random worlds.
class ListenerProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ListenerProperties, NormalizedPositiveMonotoneOrderInvariant) {
  const auto world = testing::make_random_world(GetParam());
  const auto& u = world->universe;
  const auto& lex = world->lexicon;
  ListenerModel listener(lex, u, {10.0});
  const auto& atoms = lex.atomic_forms();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const auto q = listener.lexicon_prototype(atoms[a]);
    const auto p = listener.distribution(q);
    const auto d = listener.distances(q);
    EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-9);
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_GT(p[i], 0.0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (d[i] < d[j]) EXPECT_GT(p[i], p[j]);
      }
    }
    const std::size_t b = (a + 1) % atoms.size();
    const auto ab = listener.distribution(listener.prototype(lex.combine(atoms[a], atoms[b])));
    const auto ba = listener.distribution(listener.prototype(lex.combine(atoms[b], atoms[a])));
    EXPECT_EQ(ab, ba);
  }
}

TEST_P(ListenerProperties, GammaLimits) {
  const auto world = testing::make_random_world(GetParam());
  const auto& u = world->universe;
  const auto& lex = world->lexicon;
  const Form& f = lex.form(lex.atomic_forms().front());
  const double uniform = 1.0 / static_cast<double>(u.size());
  const auto near_zero = listener_distribution(f, lex, u, {1e-9});
  for (double p : near_zero) EXPECT_NEAR(p, uniform, 1e-8);

  ListenerModel probe(lex, u, {1.0});
  const auto d = probe.distances(probe.prototype(f));
  const auto nearest = static_cast<std::size_t>(std::min_element(d.begin(), d.end()) - d.begin());
  double previous = 0.0;
  for (double gamma : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
    const double p = listener_distribution(f, lex, u, {gamma})[nearest];
    EXPECT_GE(p, previous - 1e-15);
    previous = p;
  }
}

TEST_P(ListenerProperties, PrototypeInConvexHullOfSenses) {
  const auto world = testing::make_random_world(GetParam());
  const auto& u = world->universe;
  const auto& lex = world->lexicon;
  for (const auto& s : lex.atomic_forms()) {
    const auto q = prototype(lex.form(s), lex, u).vector;
    const auto want = testing::oracle_prototype(lex, u, s);
    for (std::size_t d = 0; d < q.size(); ++d) EXPECT_NEAR(q[d], want[d], 1e-12) << s;
    // Each coordinate lies between the sense extremes.
    for (std::size_t d = 0; d < q.size(); ++d) {
      double lo = INFINITY, hi = -INFINITY;
      for (std::size_t e : lex.senses_of(s)) {
        lo = std::min(lo, u[lex.entries()[e].concept_index].embedding[d]);
        hi = std::max(hi, u[lex.entries()[e].concept_index].embedding[d]);
      }
      EXPECT_GE(q[d], lo - 1e-15);
      EXPECT_LE(q[d], hi + 1e-15);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ListenerProperties, ::testing::Range<std::uint64_t>(1, 11));

}  // namespace
}  // namespace lexeff
