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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "lexeff/baselines.hpp"
#include "lexeff/error.hpp"
#include "lexeff/frontier.hpp"
#include "lexeff/io.hpp"
#include "lexeff/stats.hpp"
#include "lexeff/taxonomy.hpp"
#include "oracle.hpp"
#include "planted.hpp"

namespace {

using namespace lexeff;
using Clock = std::chrono::steady_clock;

constexpr double kGamma = 10.0;
constexpr std::uint64_t kWorlds = 50;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Records the first failure message and keeps the verdict failed.
struct Check {
  bool ok = true;
  std::string first;
  void expect(bool condition, const std::string& what) {
    if (!condition && ok) first = what;
    ok = ok && condition;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

NeedDistribution uniform_need(const std::vector<ConceptIndex>& concepts) {
  return NeedDistribution(concepts, std::vector<double>(concepts.size(), 1.0 / static_cast<double>(concepts.size())));
}

Verdict oracle_equivalence() {
  const auto start = Clock::now();
  const auto grid = default_beta_grid();
  Check check;
  std::size_t comparisons = 0;
  for (std::uint64_t seed = 1; seed <= kWorlds; ++seed) {
    const auto w = testing::make_random_world(seed);
    ListenerModel listener(w->lexicon, w->universe, {kGamma});
    for (ConceptIndex c : w->emerging) {
      const auto oracle = testing::oracle_candidates(w->lexicon, w->universe, kGamma, c);
      CandidateSpace space(listener, c);
      for (double beta : grid) {
        const auto& want = oracle[testing::oracle_best(oracle, beta)];
        const Form got = optimal_label(c, listener, beta, SearchMode::kExhaustive);
        check.expect(got.surface == want.surface,
                     "world " + std::to_string(seed) + ": " + got.surface + " vs " + want.surface);
        const double greedy = space.cost(space.best_greedy(beta), beta);
        const double exhaustive = space.cost(space.best_exhaustive(beta), beta);
        check.expect(greedy >= exhaustive, "greedy beat exhaustive in world " + std::to_string(seed));
        ++comparisons;
      }
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 60.0, "took too long");
  return {check.ok, check.ok ? fmt("%.0f (concept, beta) cases over 50 lexicons in %.1f s", static_cast<double>(comparisons), elapsed)
                             : check.first};
}

Verdict frontier_geometry() {
  Check check;
  for (std::uint64_t seed = 1; seed <= kWorlds; ++seed) {
    const auto w = testing::make_random_world(seed);
    ListenerModel listener(w->lexicon, w->universe, {kGamma});
    const auto f = estimate_frontier(w->emerging, listener, {default_beta_grid(), SearchMode::kExhaustive, 1},
                                     uniform_need(w->emerging));
    for (std::size_t i = 1; i < f.points.size(); ++i) {
      check.expect(f.points[i].cost.avg_length <= f.points[i - 1].cost.avg_length + 1e-9,
                   "length increased in world " + std::to_string(seed));
      check.expect(f.points[i].cost.info_loss >= f.points[i - 1].cost.info_loss - 1e-9,
                   "loss decreased in world " + std::to_string(seed));
    }
    for (const auto& a : f.pareto_points) {
      for (const auto& b : f.pareto_points) check.expect(!dominates(a, b), "dominated Pareto point");
    }
  }
  return {check.ok, check.ok ? "monotone on 50 exhaustive frontiers, no dominated Pareto pair" : check.first};
}

Verdict efficiency_loss_bounds() {
  Check check;
  std::mt19937_64 rng(99);
  std::size_t encodings = 0;
  double min_raw = std::numeric_limits<double>::infinity();
  double max_own = 0.0;
  for (std::uint64_t seed = 1; seed <= kWorlds; ++seed) {
    const auto w = testing::make_random_world(seed);
    ListenerModel listener(w->lexicon, w->universe, {kGamma});
    const auto f = estimate_frontier(w->emerging, listener, {default_beta_grid(), SearchMode::kExhaustive, 1},
                                     uniform_need(w->emerging));
    const auto& atoms = w->lexicon.atomic_forms();
    for (int r = 0; r < 200; ++r) {
      std::vector<EncodingItem> items;
      for (ConceptIndex c : w->emerging) {
        EncodingItem item;
        item.concept_index = c;
        const std::size_t i = rng() % (atoms.size() + atoms.size() * atoms.size());
        if (i < atoms.size()) {
          item.form = w->lexicon.form(atoms[i]);
        } else {
          const std::size_t k = i - atoms.size();
          item.form = w->lexicon.combine(atoms[k / atoms.size()], atoms[k % atoms.size()]);
          item.strategy = Strategy::kCombination;
        }
        items.push_back(std::move(item));
      }
      const auto loss = efficiency_loss(Encoding(std::move(items)), f, listener);
      check.expect(loss.epsilon >= 0.0, "negative epsilon");
      check.expect(loss.raw >= -1e-9, "frontier missed an optimum");
      min_raw = std::min(min_raw, loss.raw);
      ++encodings;
    }
    for (const auto& p : f.points) {
      const double own = scalarized_cost(encoding_cost(p.encoding, listener, f.need), p.beta) -
                         scalarized_cost(p.cost, p.beta);
      const double eps = efficiency_loss(p.encoding, f, listener).epsilon;
      max_own = std::max({max_own, std::fabs(own), eps});
      check.expect(std::fabs(own) <= 1e-9 && eps <= 1e-9, "frontier encoding has non-zero loss");
    }
  }
  return {check.ok, check.ok ? fmt("%.0f random encodings, min raw gap %.3g; frontier encodings max |eps| %.3g",
                                   static_cast<double>(encodings), min_raw, max_own)
                             : check.first};
}

Verdict listener_model() {
  Check check;
  double worst_norm = 0.0, worst_shift = 0.0;
  for (std::uint64_t seed = 1; seed <= kWorlds; ++seed) {
    const auto w = testing::make_random_world(seed);
    ListenerModel listener(w->lexicon, w->universe, {kGamma});
    ListenerModel flat(w->lexicon, w->universe, {0.0});
    const auto& atoms = w->lexicon.atomic_forms();
    const double log_c = std::log2(static_cast<double>(w->universe.size()));
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      const auto p = listener.distribution(listener.lexicon_prototype(atoms[a]));
      worst_norm = std::max(worst_norm, std::fabs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0));
      for (ConceptIndex c = 0; c < w->universe.size(); ++c) {
        check.expect(flat.surprisal(w->lexicon.form(atoms[a]), c) == log_c, "gamma = 0 is not log2 |C|");
      }
      const std::size_t b = (a * 7 + 3) % atoms.size();
      check.expect(listener.distribution(listener.prototype(w->lexicon.combine(atoms[a], atoms[b]))) ==
                       listener.distribution(listener.prototype(w->lexicon.combine(atoms[b], atoms[a]))),
                   "constituent order changed the distribution");
      auto d = listener.distances(listener.lexicon_prototype(atoms[a]));
      const auto base = softmax_of_distances(d, kGamma);
      for (double& x : d) x += 0.731;
      const auto shifted = softmax_of_distances(d, kGamma);
      for (std::size_t i = 0; i < base.size(); ++i) worst_shift = std::max(worst_shift, std::fabs(base[i] - shifted[i]));
    }
  }
  check.expect(worst_norm <= 1e-9, "distribution not normalized");
  check.expect(worst_shift < 1e-12, "softmax not shift-invariant");
  return {check.ok, check.ok ? fmt("max |sum - 1| %.3g, max shift diff %.3g", worst_norm, worst_shift) : check.first};
}

struct GroupOutcome {
  double attested = 0.0;
  BaselineSummary near, random;
};

GroupOutcome run_group(const Encoding& enc, const ListenerModel& listener, std::size_t threads) {
  const auto need = need_marginal(enc, listener.lexicon(), listener.universe(), {});
  std::vector<ConceptIndex> concepts(need.concepts().begin(), need.concepts().end());
  const auto f = estimate_frontier(concepts, listener, {default_beta_grid(), SearchMode::kExhaustive, threads}, need);
  BaselineOptions options;
  options.near_synonyms.k = 5;
  options.replicates = {10000, 1};
  options.bootstrap_resamples = 1000;
  options.threads = threads;
  GroupOutcome out;
  out.attested = efficiency_loss(enc, f, listener).epsilon;
  out.near = baseline_summary(enc, listener, f, options, BaselineKind::kNearSynonym);
  out.random = baseline_summary(enc, listener, f, options, BaselineKind::kRandom);
  return out;
}

Verdict planted_ordering() {
  const auto start = Clock::now();
  const auto world = testing::make_planted_world();
  ListenerModel listener(world->lexicon, world->universe, {kGamma});
  Check check;
  std::string detail;
  for (const auto* group : {&world->reuse, &world->combination}) {
    const auto g = run_group(*group, listener, 4);
    const std::string name = group == &world->reuse ? "reuse" : "combination";
    check.expect(g.attested < g.near.ci.lo, name + ": attested not below near-synonym CI");
    check.expect(g.near.mean_loss < g.random.mean_loss, name + ": near-synonym mean not below random");
    check.expect(g.near.ci.hi < g.random.ci.lo, name + ": near-synonym and random CIs overlap");
    detail += name + fmt(" %.3f < %.3f [%.3f, %.3f]", g.attested, g.near.mean_loss, g.near.ci.lo, g.near.ci.hi) +
              fmt(" < %.3f [%.3f, %.3f]; ", g.random.mean_loss, g.random.ci.lo, g.random.ci.hi);
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 300.0, "took too long");
  return {check.ok, check.ok ? detail + fmt("%.1f s", elapsed) : check.first + " (" + detail + ")"};
}

Verdict strategy_contrast() {
  const auto world = testing::make_planted_world();
  std::vector<double> reuse, compound;
  for (const auto& item : world->reuse.items()) reuse.push_back(item.form.length_units);
  for (const auto& item : world->combination.items()) compound.push_back(item.form.length_units);
  Check check;
  check.expect(mean(reuse) < mean(compound), "reuse items are not shorter");
  const std::vector<double> a{1, 2, 3}, b{2, 3, 4};
  const auto hand = t_test_pooled(a, b);
  // Means 2 and 3, unit sample variances: t = -1 / sqrt(2 / 3).
  check.expect(std::fabs(hand.t - (-1.0 / std::sqrt(2.0 / 3.0))) < 1e-6 && hand.df == 4, "hand t-test mismatch");
  return {check.ok, check.ok ? fmt("mean length %.2f < %.2f; hand t = %.4f, df = %.0f", mean(reuse), mean(compound), hand.t,
                                   static_cast<double>(hand.df))
                             : check.first};
}

std::string dump(const BaselineSummary& s) {
  std::ostringstream out;
  for (std::size_t r = 0; r < s.losses.size(); ++r) {
    out << r << '\t' << format_number(s.costs[r].avg_length) << '\t' << format_number(s.costs[r].info_loss) << '\t'
        << format_number(s.losses[r]) << '\n';
  }
  out << format_number(s.ci.lo) << '\t' << format_number(s.ci.hi) << '\n';
  return out.str();
}

Verdict sampling() {
  Check check;
  std::size_t atomic = 0;
  const std::uint64_t draws = 100000;
  for (std::uint64_t r = 0; r < draws; ++r) atomic += random_candidate_index(3, "emerging", {draws, 42}, r) < 3;
  const double freq = static_cast<double>(atomic) / static_cast<double>(draws);
  check.expect(std::fabs(freq - 0.25) <= 0.01, "atomic frequency off");

  const auto world = testing::make_planted_world(7, 6);
  ListenerModel listener(world->lexicon, world->universe, {kGamma});
  const auto need = need_marginal(world->combination, world->lexicon, world->universe, {});
  std::vector<ConceptIndex> concepts(need.concepts().begin(), need.concepts().end());
  const auto f = estimate_frontier(concepts, listener, {make_beta_grid(0, 2, 0.05), SearchMode::kGreedy, 1}, need);
  std::string reference;
  for (std::size_t threads : {1u, 4u, 8u}) {
    BaselineOptions options;
    options.replicates = {3000, 5};
    options.bootstrap_resamples = 300;
    options.threads = threads;
    const std::string text = dump(baseline_summary(world->combination, listener, f, options, BaselineKind::kNearSynonym)) +
                             dump(baseline_summary(world->combination, listener, f, options, BaselineKind::kRandom));
    if (reference.empty()) reference = text;
    check.expect(text == reference, "dump differs at " + std::to_string(threads) + " threads");
  }
  return {check.ok, check.ok ? fmt("atomic frequency %.4f; dumps identical at 1, 4, 8 threads", freq) : check.first};
}

Verdict taxonomy() {
  Check check;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto dag = testing::make_random_dag(seed, 100, 0.03);
    const TaxonomyGraph graph(dag.universe, dag.edges);
    const std::size_t n = dag.universe.size();
    for (ConceptIndex c = 0; c < n; ++c) {
      const auto reach = testing::dfs_reachable(dag.edges, n, c);
      const auto dist = testing::bfs_up_distances(dag.edges, n, c);
      for (ConceptIndex a = 0; a < n; ++a) {
        check.expect(graph.is_strict_ancestor(a, c) == (reach[a] && a != c), "closure mismatch");
        const auto d = graph.up_distance(c, a);
        check.expect(d.has_value() == reach[a] && (!d || *d == dist[a]), "distance mismatch");
      }
      check.expect(wu_palmer(c, c, graph, dag.universe) == 1.0, "self similarity is not 1");
    }
  }

  // root -> {left, right}; left -> leaf; leaf -> deeper, so D = 4.
  std::vector<Concept> concepts;
  for (const char* id : {"root", "left", "right", "leaf", "deeper", "fresh"}) concepts.push_back({id, "", {1.0, 0.5}, 1.0});
  const Universe u(std::move(concepts));
  const std::vector<std::pair<ConceptIndex, ConceptIndex>> edges{{1, 0}, {2, 0}, {3, 1}, {4, 3}, {5, 3}};
  const TaxonomyGraph graph(u, edges);
  check.expect(wu_palmer(1, 2, graph, u) == 0.5, "wu_palmer(left, right) != 0.5");
  check.expect(leacock_chodorow(3, 3, graph) == 3.0, "self leacock_chodorow != 3");
  check.expect(leacock_chodorow(3, 1, graph) == 2.0, "parent leacock_chodorow != 2");
  check.expect(leacock_chodorow(4, 2, graph) < leacock_chodorow(3, 2, graph), "leacock_chodorow not decreasing");

  const Lexicon lex({{Form{"leaf", {"leaf"}, 4, {"n"}}, 3, 5, 5}, {Form{"birthday", {"birthday"}, 8, {"n"}}, 2, 5, 5}},
                    u, {});
  check.expect(is_literal(5, lex.form("leaf"), lex, graph), "one-step hyponym not literal");
  check.expect(!is_literal(3, lex.form("leaf"), lex, graph), "zero-step item counted literal");
  check.expect(!is_literal(1, lex.form("birthday"), lex, graph), "unrelated item counted literal");
  check.expect(classify_compound(5, lex.combine("birthday", "leaf"), lex, graph) == CompoundClass::kEndocentric,
               "birthday-style compound not endocentric");
  check.expect(classify_compound(5, lex.combine("leaf", "birthday"), lex, graph) == CompoundClass::kExocentric,
               "compound with unrelated head not exocentric");
  return {check.ok, check.ok ? "closure and distances match DFS on 10 random 100-node DAGs; hand values exact" : check.first};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"oracle equivalence", oracle_equivalence}, {"frontier geometry", frontier_geometry},
      {"efficiency loss", efficiency_loss_bounds}, {"listener model", listener_model},
      {"planted baseline ordering", planted_ordering}, {"strategy contrast", strategy_contrast},
      {"sampling", sampling}, {"taxonomy", taxonomy}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
