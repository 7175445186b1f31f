// tests/baseline_test.cc

// Copyright 2026 The nvtext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "nvtext/baseline.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "gradient_check.h"
#include "json.hpp"
#include "test_util.h"

namespace nvtext {
namespace {

TEST(Tokenize, LowercasesAndSplitsOnPunctuation) {
  EXPECT_EQ(tokenize("Jaw-drop, JAW drop!"),
            (std::vector<std::string>{"jaw", "drop", "jaw", "drop"}));
  EXPECT_TRUE(tokenize("  [ ] , ").empty());
  const std::vector<std::string> toks{"a", "b", "c"};
  EXPECT_EQ(ngrams(toks, 2), (std::vector<std::string>{"a", "b", "c", "a b", "b c"}));
  EXPECT_THROW(ngrams(toks, 3), Error);
}

TEST(Featurize, CountsAndEmpty) {
  const std::vector<std::string> docs{"jaw drop", "brow"};
  const NGramVocab v = NGramVocab::build(docs, 1);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v.term(0), "brow");
  EXPECT_EQ(v.term(1), "drop");
  EXPECT_EQ(v.term(2), "jaw");
  const FeaturizerOptions counts{1, Weighting::kCounts, false};
  const SparseVector x = featurize("jaw drop jaw unseen", v, counts);
  EXPECT_EQ(x, (SparseVector{{1, 1.0}, {2, 2.0}}));
  EXPECT_TRUE(featurize("", v, counts).empty());
  EXPECT_TRUE(featurize("", v).empty());
}

TEST(Featurize, TfIdfMatchesHandFormula) {
  const std::vector<std::string> docs{"a b", "a c", "a", "a b b"};
  const NGramVocab v = NGramVocab::build(docs, 1);
  const double n = 4.0;
  auto idf = [&](double df) { return std::log((1.0 + n) / (1.0 + df)) + 1.0; };
  EXPECT_DOUBLE_EQ(v.idf(*v.index("a")), 1.0);
  EXPECT_DOUBLE_EQ(v.idf(*v.index("b")), idf(2));
  EXPECT_DOUBLE_EQ(v.idf(*v.index("c")), idf(1));
  const FeaturizerOptions raw{1, Weighting::kTfIdf, false};
  const SparseVector x = featurize("a b b", v, raw);
  ASSERT_EQ(x.size(), 2u);
  EXPECT_DOUBLE_EQ(x[0].second, 1.0);
  EXPECT_DOUBLE_EQ(x[1].second, 2.0 * idf(2));
  const SparseVector unit = featurize("a b b", v);
  const double norm = std::sqrt(1.0 + 4.0 * idf(2) * idf(2));
  EXPECT_NEAR(unit[0].second, 1.0 / norm, 1e-15);
  EXPECT_NEAR(unit[1].second, 2.0 * idf(2) / norm, 1e-15);
  const NGramVocab bi = NGramVocab::build(docs, 2, 2);
  EXPECT_TRUE(bi.index("a b"));
  EXPECT_FALSE(bi.index("a c"));
}

TEST(Gradient, MatchesCentralDifferences) {
  Rng rng(99);
  for (Task task : {Task::kBinary, Task::kRegression}) {
    for (int i = 0; i < 20; ++i) {
      const testing::GradientInstance g = testing::random_gradient_instance(rng, task);
      EXPECT_LE(testing::gradient_relative_error(g, task), 1e-6);
    }
  }
}

TEST(Train, SeparableDocsAndMonotoneLoss) {
  const std::vector<Example> ex{{{{0, 1.0}}, 1.0}, {{{1, 1.0}}, 0.0}};
  const LinearModel m = train(ex, 2, Task::kBinary, TrainConfig::defaults(Task::kBinary));
  EXPECT_GT(predict(m, ex[0].x), 0.5);
  EXPECT_LT(predict(m, ex[1].x), 0.5);
  for (std::size_t i = 1; i < m.loss_history.size(); ++i)
    EXPECT_LE(m.loss_history[i], m.loss_history[i - 1]);
  EXPECT_THROW(train({}, 2, Task::kBinary, {}), Error);
  EXPECT_THROW(train(ex, 1, Task::kBinary, {}), Error);
}

TEST(Train, ConstantLabelsGiveConstantPredictor) {
  Rng rng(5);
  std::vector<Example> ex;
  for (int i = 0; i < 30; ++i) {
    SparseVector x{{static_cast<std::size_t>(rng.index(10)), 1.0}};
    ex.push_back({x, 1.7});
  }
  TrainConfig cfg = TrainConfig::defaults(Task::kRegression);
  cfg.l2 = 0.0;
  cfg.epochs = 3000;
  const LinearModel m = train(ex, 10, Task::kRegression, cfg);
  for (const Example& e : ex) EXPECT_NEAR(predict(m, e.x), 1.7, 1e-6);
  for (std::size_t i = 1; i < m.loss_history.size(); ++i)
    EXPECT_LE(m.loss_history[i], m.loss_history[i - 1]);
}

TEST(Train, DeterministicGivenSeed) {
  Rng rng(6);
  const auto g = testing::random_gradient_instance(rng, Task::kBinary);
  TrainConfig cfg;
  cfg.seed = 77;
  cfg.epochs = 20;
  const LinearModel a = train(g.examples, g.weights.size(), Task::kBinary, cfg);
  const LinearModel b = train(g.examples, g.weights.size(), Task::kBinary, cfg);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.bias, b.bias);
}

// Second, independent metric implementation.
struct RefMetrics {
  double acc2, f1, mae, corr, acc7;
};

RefMetrics reference_metrics(const std::vector<double>& p, const std::vector<double>& y,
                             bool regression) {
  RefMetrics r{};
  const std::size_t n = y.size();
  for (std::size_t i = 0; i < n; ++i) r.mae += std::fabs(p[i] - y[i]) / static_cast<double>(n);
  double mp = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mp += p[i];
    my += y[i];
  }
  mp /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double num = 0, dp = 0, dy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (p[i] - mp) * (y[i] - my);
    dp += (p[i] - mp) * (p[i] - mp);
    dy += (y[i] - my) * (y[i] - my);
  }
  r.corr = dp > 0 && dy > 0 ? num / std::sqrt(dp * dy) : 0.0;
  std::vector<int> t, q;
  int hits7 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (regression) {
      auto cls = [](double v) { return std::max(-3.0, std::min(3.0, std::round(v))); };
      hits7 += cls(p[i]) == cls(y[i]);
      if (y[i] == 0) continue;
      t.push_back(y[i] > 0);
      q.push_back(p[i] > 0);
    } else {
      t.push_back(y[i] >= 0.5);
      q.push_back(p[i] >= 0.5);
    }
  }
  r.acc7 = static_cast<double>(hits7) / static_cast<double>(n);
  int correct = 0;
  for (std::size_t i = 0; i < t.size(); ++i) correct += t[i] == q[i];
  r.acc2 = static_cast<double>(correct) / static_cast<double>(t.size());
  for (int cls : {0, 1}) {
    int tp = 0, fp = 0, fn = 0, support = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      tp += t[i] == cls && q[i] == cls;
      fp += t[i] != cls && q[i] == cls;
      fn += t[i] == cls && q[i] != cls;
      support += t[i] == cls;
    }
    const double prec = tp + fp ? static_cast<double>(tp) / (tp + fp) : 0.0;
    const double rec = tp + fn ? static_cast<double>(tp) / (tp + fn) : 0.0;
    const double f = prec + rec > 0 ? 2 * prec * rec / (prec + rec) : 0.0;
    r.f1 += f * support / static_cast<double>(t.size());
  }
  return r;
}

TEST(Metrics, MatchIndependentImplementation) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const bool regression = trial % 2 == 0;
    const std::size_t n = 5 + rng.index(100);
    std::vector<double> p(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (regression) {
        y[i] = std::round(rng.uniform(-3, 3) * 5) / 5;  // includes zeros
        p[i] = y[i] + rng.normal(0, 1.2);
      } else {
        y[i] = rng.bernoulli(0.5);
        p[i] = rng.uniform();
      }
    }
    const Metrics m = compute_metrics(p, y, regression ? Task::kRegression : Task::kBinary);
    const RefMetrics r = reference_metrics(p, y, regression);
    EXPECT_NEAR(m.acc2, r.acc2, 1e-12);
    EXPECT_NEAR(m.f1, r.f1, 1e-12);
    EXPECT_NEAR(m.mae, r.mae, 1e-12);
    EXPECT_NEAR(m.corr, r.corr, 1e-12);
    EXPECT_EQ(m.acc7.has_value(), regression);
    if (regression) EXPECT_NEAR(*m.acc7, r.acc7, 1e-12);
    EXPECT_GE(m.acc2, 0.0);
    EXPECT_LE(m.acc2, 1.0);
    EXPECT_GE(m.f1, 0.0);
    EXPECT_LE(m.f1, 1.0);
    EXPECT_GE(m.corr, -1.0);
    EXPECT_LE(m.corr, 1.0);
    EXPECT_GE(m.mae, 0.0);
  }
}

TEST(Metrics, PerfectAndConstantPredictors) {
  const std::vector<double> y{1, 0, 1, 0};
  const Metrics perfect = compute_metrics(y, y, Task::kBinary);
  EXPECT_EQ(perfect.acc2, 1.0);
  EXPECT_EQ(perfect.mae, 0.0);
  const std::vector<double> constant{0.9, 0.9, 0.9, 0.9};
  const Metrics c = compute_metrics(constant, y, Task::kBinary);
  EXPECT_EQ(c.acc2, 0.5);
  EXPECT_EQ(c.corr, 0.0);
  const std::vector<double> s{-2, 0, 1.4, 3};
  const Metrics r = compute_metrics(s, s, Task::kRegression);
  EXPECT_EQ(r.acc2, 1.0);
  EXPECT_EQ(*r.acc7, 1.0);
}

CorpusRecord text_record(const std::string& id, Split split, Label label,
                         const std::string& text) {
  CorpusRecord r;
  r.segment_id = id;
  r.split = split;
  r.label = label;
  r.text = text;
  r.extended.push_back(assemble_extended_text(text, {}, AblationMode::kT));
  return r;
}

TEST(RunBaseline, LearnsTokenRuleAndRejectsMismatches) {
  std::vector<CorpusRecord> recs;
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const bool pos = rng.bernoulli(0.5);
    const std::string text = std::string(pos ? "good" : "bad") + " movie " +
                             (rng.bernoulli(0.5) ? "really" : "quite");
    recs.push_back(text_record("r" + std::to_string(i), i < 150 ? Split::kTrain : Split::kTest,
                               Label::binary(pos), text));
  }
  const ModeResult res = run_baseline(recs, AblationMode::kT, {});
  EXPECT_EQ(res.test.acc2, 1.0);
  EXPECT_EQ(res.train_count, 150u);
  EXPECT_THROW(run_baseline(recs, AblationMode::kTA, {}), Error);
  BaselineOptions reg;
  reg.task = Task::kRegression;
  try {
    run_baseline(recs, AblationMode::kT, reg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("task/label mismatch"), std::string::npos);
  }
  EXPECT_THROW(run_baseline({}, AblationMode::kT, {}), Error);
}

TEST(RunBaseline, BinaryTaskOnSentimentDropsZeros) {
  std::vector<CorpusRecord> recs;
  for (int i = 0; i < 40; ++i) {
    const double y = (i % 3) - 1.0;  // -1, 0, +1
    const std::string w = y > 0 ? "nice" : y < 0 ? "awful" : "meh";
    recs.push_back(text_record("r" + std::to_string(i), i < 30 ? Split::kTrain : Split::kTest,
                               Label::sentiment(y), w + " film"));
  }
  const ModeResult res = run_baseline(recs, AblationMode::kT, {});
  EXPECT_EQ(res.train_count, 20u);
  EXPECT_EQ(res.test.count, 7u);
  BaselineOptions reg;
  reg.task = Task::kRegression;
  const ModeResult r = run_baseline(recs, AblationMode::kT, reg);
  EXPECT_EQ(r.train_count, 30u);
  EXPECT_TRUE(r.test.acc7);
}

TEST(AblationTable, FourColumnsAndJson) {
  std::vector<ModeResult> results;
  for (AblationMode m : kAllModes) {
    ModeResult r;
    r.mode = m;
    r.test.acc2 = 0.5 + 0.1 * static_cast<double>(results.size());
    results.push_back(r);
  }
  const std::string table = format_ablation_table("CMU-MOSI", Task::kBinary, results);
  const std::string header = table.substr(0, table.find('\n'));
  EXPECT_EQ(header, "Dataset          T     T+V     T+A   T+A+V");
  EXPECT_NE(table.find("CMU-MOSI     50.00   60.00   70.00   80.00"), std::string::npos) << table;
  const auto j = nlohmann::json::parse(ablation_json("CMU-MOSI", Task::kBinary, results));
  EXPECT_EQ(j["results"].size(), 4u);
  EXPECT_EQ(j["results"][3]["mode"], "T+A+V");
  EXPECT_EQ(j["task"], "binary");
  EXPECT_TRUE(j["results"][0]["test"]["acc7"].is_null());
}

}  // namespace
}  // namespace nvtext
