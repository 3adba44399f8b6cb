// Copyright 2026 The rematch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "rematch/bench.hpp"
#include "rematch/eval.hpp"
#include "rematch/penman.hpp"
#include "rematch/spearman.hpp"
#include "rematch/synth.hpp"
#include "test_support.hpp"

namespace rematch {
namespace {

double rho(std::vector<double> metric, std::vector<double> gold) { return spearman(metric, gold); }

DegenerateSide side_of(std::vector<double> metric, std::vector<double> gold) {
  try {
    spearman(metric, gold);
  } catch (const DegenerateInput& e) {
    return e.side();
  }
  ADD_FAILURE() << "no DegenerateInput";
  return DegenerateSide::Both;
}

TEST(Spearman, Examples) {
  EXPECT_DOUBLE_EQ(rho({0.1, 0.5, 0.9}, {0.1, 0.5, 0.9}), 1.0);
  EXPECT_DOUBLE_EQ(rho({0.9, 0.5, 0.1}, {0.1, 0.5, 0.9}), -1.0);
  EXPECT_NEAR(rho({1, 3, 2, 4}, {1, 2, 3, 4}), 0.8, 1e-12);
}

TEST(Spearman, AverageRanks) {
  std::vector<double> v{10, 20, 20, 30, 20};
  EXPECT_EQ(average_ranks(v), (std::vector<double>{1, 3, 3, 5, 3}));
}

TEST(Spearman, TiesUsePearsonOnRanks) {
  // Ranks: metric (1.5, 1.5, 3, 4), gold (1, 2, 3, 4). Pearson by hand:
  // mean 2.5; dm = (-1, -1, .5, 1.5), dg = (-1.5, -.5, .5, 1.5);
  // cov = 1.5 + .5 + .25 + 2.25 = 4.5; |dm|^2 = 4.5, |dg|^2 = 5.
  EXPECT_NEAR(rho({0.2, 0.2, 0.5, 0.7}, {1, 2, 3, 4}), 4.5 / std::sqrt(4.5 * 5.0), 1e-12);
}

TEST(Spearman, Degenerate) {
  EXPECT_EQ(side_of({1}, {1}), DegenerateSide::TooFewPairs);
  EXPECT_EQ(side_of({1, 1, 1}, {1, 2, 3}), DegenerateSide::Metric);
  EXPECT_EQ(side_of({1, 2, 3}, {2, 2, 2}), DegenerateSide::Gold);
  EXPECT_EQ(side_of({1, 1}, {2, 2}), DegenerateSide::Both);
}

TEST(Spearman, InvariantUnderMonotoneTransforms) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> m, g;
    for (int i = 0; i < 30; ++i) {
      m.push_back(static_cast<double>(rng.below(10)) / 10.0);
      g.push_back(rng.unit());
    }
    std::vector<double> m2, g2, neg;
    for (double x : m) m2.push_back(std::exp(3 * x) - 7);
    for (double x : g) g2.push_back(x * x * x);
    for (double x : g) neg.push_back(-x);
    double base = rho(m, g);
    EXPECT_NEAR(rho(m2, g2), base, 1e-12);
    EXPECT_NEAR(rho(m, neg), -base, 1e-12);
    EXPECT_NEAR(rho(g, g), 1.0, 1e-12);
    EXPECT_NEAR(rho(g, neg), -1.0, 1e-12);
  }
}

std::vector<RewiredPair> small_rare(std::uint64_t seed) {
  SynthConfig sc;
  sc.graphs = 30;
  sc.min_size = 8;
  sc.max_size = 40;
  sc.seed = seed;
  std::vector<RewiredPair> out;
  Dataset ds = build_dataset(synthesize_corpus(sc), {}, {}, 1);
  for (auto* s : {&ds.train, &ds.dev, &ds.test}) out.insert(out.end(), s->begin(), s->end());
  return out;
}

TEST(EvalStructural, RematchTracksGoldAndLabelsDegenerate) {
  auto pairs = small_rare(2);
  EvalOptions opts;
  StructuralReport r = eval_structural(pairs, opts);
  EXPECT_GT(r.rho, 0.8);
  EXPECT_EQ(r.scored.size(), pairs.size());
  ASSERT_FALSE(r.levels.empty());
  EXPECT_DOUBLE_EQ(r.levels.front().swap_fraction, 0.0);
  EXPECT_DOUBLE_EQ(r.levels.front().mean_score, 1.0);

  opts.metric = MetricKind::Labels;
  EXPECT_THROW(eval_structural(pairs, opts), DegenerateInput);
}

TEST(EvalStructural, LevelZeroPairsScorePerfectlyEverywhere) {
  auto pairs = small_rare(5);
  for (MetricKind k : {MetricKind::Rematch, MetricKind::Smatch, MetricKind::Labels}) {
    EvalOptions opts;
    opts.metric = k;
    auto scored = score_rewired(pairs, opts);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].swapped_edges == 0) {
        EXPECT_DOUBLE_EQ(scored[i].metric_score, 1.0) << pairs[i].id;
      }
  }
}

TEST(EvalStructural, WorkerCountDoesNotChangeScores) {
  auto pairs = small_rare(7);
  EvalOptions one, three;
  one.metric = three.metric = MetricKind::Smatch;
  three.jobs = 3;
  auto a = score_rewired(pairs, one);
  auto b = score_rewired(pairs, three);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].metric_score, b[i].metric_score);
  }
}

TEST(EvalStructural, MetricEqualToGoldGivesOne) {
  std::vector<ScoredPair> s;
  for (int i = 0; i < 10; ++i) s.push_back({"p" + std::to_string(i), i / 10.0, i / 10.0});
  EXPECT_DOUBLE_EQ(spearman(s), 1.0);
}

TEST(EvalSemantic, MonotoneOverlapFixture) {
  // Pair k shares k of ten leaves, and gold rises with k.
  std::vector<SemanticPair> pairs;
  for (int k = 1; k <= 10; ++k) {
    std::string a = "(r / root", b = "(r / root";
    for (int i = 0; i < 10; ++i) {
      a += " :op" + std::to_string(i + 1) + " (a" + std::to_string(i) + " / leaf" + std::to_string(i) + ")";
      std::string concept_b = i < k ? "leaf" + std::to_string(i) : "other" + std::to_string(i);
      b += " :op" + std::to_string(i + 1) + " (a" + std::to_string(i) + " / " + concept_b + ")";
    }
    pairs.push_back({"k" + std::to_string(k), static_cast<double>(k), parse_penman(a + ")"), parse_penman(b + ")")});
  }
  EvalOptions opts;
  EXPECT_DOUBLE_EQ(eval_semantic(pairs, opts).rho, 1.0);
  opts.metric = MetricKind::Smatch;
  EXPECT_DOUBLE_EQ(eval_semantic(pairs, opts).rho, 1.0);
}

TEST(EvalSemantic, SelfPairsAreDegenerate) {
  std::vector<SemanticPair> pairs;
  for (const char* t : {testing::kKnife, testing::kTalk, testing::kTalkNegated})
    pairs.push_back({t, 5.0, parse_penman(t), parse_penman(t)});
  EXPECT_THROW(eval_semantic(pairs, {}), DegenerateInput);
}

TEST(EvalSemantic, ReadsPairFile) {
  testing::TempDir dir("pairs");
  testing::write_file(dir.path() / "p.jsonl",
                      "{\"id\": \"a\", \"gold\": 4.5, \"amr_a\": \"(x / y)\", \"amr_b\": \"(x / z)\"}\n\n"
                      "{\"id\": \"b\", \"gold\": 1, \"amr_a\": \"(x / y)\", \"amr_b\": \"(x / y :polarity -)\"}\n");
  auto pairs = read_semantic_pairs(dir.path() / "p.jsonl");
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[1].id, "b");
  EXPECT_DOUBLE_EQ(pairs[0].gold, 4.5);
  testing::write_file(dir.path() / "bad.jsonl", "{\"id\": \"a\", \"gold\": 1, \"amr_a\": \"(x / y\", \"amr_b\": \"(x / z)\"}\n");
  try {
    read_semantic_pairs(dir.path() / "bad.jsonl");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("pair a"), std::string::npos) << e.what();
  }
}

TEST(Bench, SamplingIsUniformDistinctAndSeeded) {
  auto a = sample_pairs(20, 50, 1);
  EXPECT_EQ(a.size(), 50u);
  std::set<std::pair<std::size_t, std::size_t>> seen(a.begin(), a.end());
  EXPECT_EQ(seen.size(), 50u);
  for (auto [i, j] : a) {
    EXPECT_LT(i, j);
    EXPECT_LT(j, 20u);
  }
  EXPECT_EQ(sample_pairs(20, 50, 1), a);
  EXPECT_NE(sample_pairs(20, 50, 2), a);
  EXPECT_EQ(sample_pairs(5, 100, 1).size(), 10u);
  EXPECT_THROW(sample_pairs(1, 1, 1), InsufficientCorpus);

  // Every pair of a small corpus is drawn about equally often.
  std::map<std::pair<std::size_t, std::size_t>, int> counts;
  for (std::uint64_t s = 0; s < 3000; ++s)
    for (auto p : sample_pairs(5, 3, s)) ++counts[p];
  ASSERT_EQ(counts.size(), 10u);
  for (auto& [p, c] : counts) EXPECT_NEAR(c, 900, 120);
}

TEST(Bench, LogLogFit) {
  std::vector<BenchRecord> recs;
  for (double n : {10.0, 40.0, 100.0, 400.0, 1000.0})
    recs.push_back({"x", n, 0, static_cast<std::uint64_t>(5.0 * n * n)});
  ScalingFit f = fit_loglog(recs, 31.6);
  EXPECT_EQ(f.points, 4u);
  EXPECT_NEAR(f.slope, 2.0, 1e-6);
  EXPECT_NEAR(f.intercept, std::log10(5.0), 1e-6);
  EXPECT_TRUE(std::isnan(fit_loglog(recs, 500).slope));
}

TEST(Bench, RecordsAndCsv) {
  SynthConfig sc;
  sc.graphs = 8;
  sc.min_size = 10;
  sc.max_size = 50;
  auto corpus = synthesize_corpus(sc);
  BenchOptions bo;
  bo.pairs = 6;
  auto results = bench(corpus, bo);
  ASSERT_EQ(results.size(), 2u);
  for (const auto& mb : results) {
    ASSERT_EQ(mb.records.size(), 6u);
    for (const auto& r : mb.records) EXPECT_GT(r.n, 0.0);
  }
  std::string csv = bench_csv(results);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,N,search_space,runtime_ns");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
  EXPECT_NE(csv.find("\nsmatch:synth-"), std::string::npos);
  EXPECT_THROW(bench({corpus[0]}, bo), InsufficientCorpus);
}

}  // namespace
}  // namespace rematch
