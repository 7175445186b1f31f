// core/src/baseline.cc

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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nvtext/random.h"

namespace nvtext {

std::string_view to_string(Task task) {
  return task == Task::kBinary ? "binary" : "regression";
}

Task parse_task(std::string_view name) {
  if (name == "binary") return Task::kBinary;
  if (name == "regression") return Task::kRegression;
  throw Error("unknown task '" + std::string(name) + "' (expected binary or regression)");
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current += static_cast<char>(std::tolower(c));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> ngrams(std::span<const std::string> tokens, int order) {
  if (order < 1 || order > 2) throw Error("n-gram order must be 1 or 2");
  std::vector<std::string> out(tokens.begin(), tokens.end());
  if (order == 2)
    for (std::size_t i = 1; i < tokens.size(); ++i)
      out.push_back(tokens[i - 1] + " " + tokens[i]);
  return out;
}

NGramVocab NGramVocab::build(std::span<const std::string> documents, int order,
                             std::size_t min_df) {
  std::map<std::string, std::size_t> df;
  for (const std::string& doc : documents) {
    const auto grams = ngrams(tokenize(doc), order);
    const std::set<std::string> unique(grams.begin(), grams.end());
    for (const std::string& g : unique) ++df[g];
  }
  NGramVocab v;
  v.order_ = order;
  v.num_documents_ = documents.size();
  for (const auto& [term, count] : df) {
    if (count < min_df) continue;
    v.lookup_.emplace(term, v.terms_.size());
    v.terms_.push_back(term);
    v.df_.push_back(count);
  }
  return v;
}

std::optional<std::size_t> NGramVocab::index(std::string_view term) const {
  const auto it = lookup_.find(term);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

double NGramVocab::idf(std::size_t index) const {
  return std::log((1.0 + static_cast<double>(num_documents_)) /
                  (1.0 + static_cast<double>(df_[index]))) +
         1.0;
}

SparseVector featurize(std::string_view text, const NGramVocab& vocab,
                       const FeaturizerOptions& options) {
  std::map<std::size_t, double> counts;
  for (const std::string& g : ngrams(tokenize(text), vocab.order()))
    if (const auto idx = vocab.index(g)) counts[*idx] += 1.0;
  SparseVector out(counts.begin(), counts.end());
  if (options.weighting == Weighting::kTfIdf)
    for (auto& [idx, value] : out) value *= vocab.idf(idx);
  if (options.l2_normalize) {
    double norm = 0.0;
    for (const auto& [idx, value] : out) norm += value * value;
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (auto& [idx, value] : out) value /= norm;
  }
  return out;
}

TrainConfig TrainConfig::defaults(Task task) {
  TrainConfig c;
  c.learning_rate = task == Task::kBinary ? 1.0 : 0.2;
  return c;
}

namespace {

double dot(std::span<const double> w, const SparseVector& x) {
  double z = 0.0;
  for (const auto& [idx, value] : x) z += w[idx] * value;
  return z;
}

// log(1 + exp(z)) without overflow.
double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_examples(std::span<const Example> examples, std::size_t dim) {
  for (const Example& e : examples)
    for (const auto& [idx, value] : e.x)
      if (idx >= dim) throw Error("feature index out of range");
}

}  // namespace

double training_objective(std::span<const double> weights, double bias,
                          std::span<const Example> examples, Task task, double l2) {
  if (examples.empty()) throw Error("training objective of an empty set");
  double loss = 0.0;
  for (const Example& e : examples) {
    const double z = dot(weights, e.x) + bias;
    if (task == Task::kBinary) {
      loss += softplus(z) - e.y * z;
    } else {
      const double r = z - e.y;
      loss += r * r;
    }
  }
  loss /= static_cast<double>(examples.size());
  double norm2 = 0.0;
  for (double w : weights) norm2 += w * w;
  return loss + 0.5 * l2 * norm2;
}

std::vector<double> training_gradient(std::span<const double> weights, double bias,
                                      std::span<const Example> examples, Task task,
                                      double l2) {
  if (examples.empty()) throw Error("training gradient of an empty set");
  std::vector<double> grad(weights.size() + 1, 0.0);
  const double scale = 1.0 / static_cast<double>(examples.size());
  for (const Example& e : examples) {
    const double z = dot(weights, e.x) + bias;
    const double dz = task == Task::kBinary ? sigmoid(z) - e.y : 2.0 * (z - e.y);
    for (const auto& [idx, value] : e.x) grad[idx] += scale * dz * value;
    grad.back() += scale * dz;
  }
  for (std::size_t i = 0; i < weights.size(); ++i) grad[i] += l2 * weights[i];
  return grad;
}

LinearModel train(std::span<const Example> examples, std::size_t dim, Task task,
                  const TrainConfig& config) {
  if (examples.empty()) throw Error("cannot train on an empty training set");
  if (!(config.learning_rate > 0.0)) throw Error("learning rate must be positive");
  check_examples(examples, dim);
  LinearModel model;
  model.task = task;
  model.config = config;
  model.weights.assign(dim, 0.0);
  if (config.init_scale > 0.0) {
    Rng rng(config.seed);
    for (double& w : model.weights) w = rng.normal(0.0, config.init_scale);
  }
  model.loss_history.reserve(config.epochs + 1);
  model.loss_history.push_back(
      training_objective(model.weights, model.bias, examples, task, config.l2));
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const auto grad = training_gradient(model.weights, model.bias, examples, task, config.l2);
    for (std::size_t i = 0; i < dim; ++i) model.weights[i] -= config.learning_rate * grad[i];
    model.bias -= config.learning_rate * grad.back();
    model.loss_history.push_back(
        training_objective(model.weights, model.bias, examples, task, config.l2));
  }
  return model;
}

double predict(const LinearModel& model, const SparseVector& x) {
  double z = model.bias;
  for (const auto& [idx, value] : x)
    if (idx < model.weights.size()) z += model.weights[idx] * value;
  return model.task == Task::kBinary ? sigmoid(z) : z;
}

namespace {

double pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  if (a.size() < 2) return 0.0;
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (!(saa > 0.0) || !(sbb > 0.0)) return 0.0;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

struct BinaryScores {
  double accuracy = 0.0;
  double weighted_f1 = 0.0;
};

BinaryScores binary_scores(const std::vector<bool>& truth, const std::vector<bool>& pred) {
  BinaryScores s;
  if (truth.empty()) return s;
  std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] && pred[i]) ++tp;
    else if (!truth[i] && !pred[i]) ++tn;
    else if (!truth[i] && pred[i]) ++fp;
    else ++fn;
  }
  const double n = static_cast<double>(truth.size());
  s.accuracy = static_cast<double>(tp + tn) / n;
  auto f1 = [](std::size_t hit, std::size_t false_pos, std::size_t false_neg) {
    const double denom = static_cast<double>(2 * hit + false_pos + false_neg);
    return denom > 0.0 ? 2.0 * static_cast<double>(hit) / denom : 0.0;
  };
  const double support_pos = static_cast<double>(tp + fn);
  const double support_neg = static_cast<double>(tn + fp);
  s.weighted_f1 = (support_pos * f1(tp, fp, fn) + support_neg * f1(tn, fn, fp)) / n;
  return s;
}

double round_clamp7(double v) { return std::clamp(std::nearbyint(v), -3.0, 3.0); }

}  // namespace

Metrics compute_metrics(std::span<const double> predictions, std::span<const double> labels,
                        Task task) {
  if (predictions.size() != labels.size())
    throw Error("metrics: prediction and label counts differ");
  Metrics m;
  m.count = labels.size();
  if (labels.empty()) return m;
  const double n = static_cast<double>(labels.size());
  double abs_err = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) abs_err += std::abs(predictions[i] - labels[i]);
  m.mae = abs_err / n;
  m.corr = pearson(predictions, labels);

  std::vector<bool> truth, pred;
  if (task == Task::kRegression) {
    std::size_t hits7 = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (round_clamp7(predictions[i]) == round_clamp7(labels[i])) ++hits7;
      if (labels[i] != 0.0) {
        truth.push_back(labels[i] > 0.0);
        pred.push_back(predictions[i] > 0.0);
      }
    }
    m.acc7 = static_cast<double>(hits7) / n;
  } else {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      truth.push_back(labels[i] >= 0.5);
      pred.push_back(predictions[i] >= 0.5);
    }
  }
  const BinaryScores s = binary_scores(truth, pred);
  m.acc2 = s.accuracy;
  m.f1 = s.weighted_f1;
  return m;
}

namespace {

// Returns false for records that the task excludes.
bool target_for(const CorpusRecord& r, Task task, double& y) {
  if (task == Task::kRegression) {
    if (r.label.kind != LabelKind::kSentiment)
      throw Error("task/label mismatch: regression needs sentiment labels (record '" +
                  r.segment_id + "' is binary)");
    y = r.label.value;
    return true;
  }
  if (r.label.kind == LabelKind::kBinary) {
    y = r.label.value;
    return true;
  }
  if (r.label.value == 0.0) return false;
  y = r.label.value > 0.0 ? 1.0 : 0.0;
  return true;
}

const std::string& mode_text(const CorpusRecord& r, AblationMode mode) {
  const ExtendedText* e = r.find(mode);
  if (!e)
    throw Error("corpus record '" + r.segment_id + "' has no extended text for mode " +
                std::string(mode_label(mode)));
  return e->text;
}

}  // namespace

ModeResult run_baseline(std::span<const CorpusRecord> records, AblationMode mode,
                        const BaselineOptions& options) {
  if (records.empty()) throw Error("baseline: corpus is empty");
  std::vector<std::string> train_docs, test_docs;
  std::vector<double> train_y, test_y;
  for (const CorpusRecord& r : records) {
    double y = 0.0;
    if (!target_for(r, options.task, y)) continue;
    if (r.split == Split::kTrain) {
      train_docs.push_back(mode_text(r, mode));
      train_y.push_back(y);
    } else if (r.split == Split::kTest) {
      test_docs.push_back(mode_text(r, mode));
      test_y.push_back(y);
    }
  }
  if (train_docs.empty()) throw Error("baseline: no training records");
  if (test_docs.empty()) throw Error("baseline: no test records");

  const NGramVocab vocab = NGramVocab::build(train_docs, options.features.order);
  auto examples = [&](const std::vector<std::string>& docs, const std::vector<double>& ys) {
    std::vector<Example> out;
    out.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i)
      out.push_back({featurize(docs[i], vocab, options.features), ys[i]});
    return out;
  };
  const std::vector<Example> train_set = examples(train_docs, train_y);
  const std::vector<Example> test_set = examples(test_docs, test_y);

  const TrainConfig config = options.config.value_or(TrainConfig::defaults(options.task));
  const LinearModel model = train(train_set, vocab.size(), options.task, config);

  auto score = [&](const std::vector<Example>& set) {
    std::vector<double> preds, labels;
    for (const Example& e : set) {
      preds.push_back(predict(model, e.x));
      labels.push_back(e.y);
    }
    return compute_metrics(preds, labels, options.task);
  };
  ModeResult result;
  result.mode = mode;
  result.train_count = train_set.size();
  result.train = score(train_set);
  result.test = score(test_set);
  result.final_loss = model.loss_history.back();
  return result;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string pad(std::string s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

}  // namespace

std::string format_ablation_table(std::string_view dataset, Task task,
                                  std::span<const ModeResult> results) {
  const std::size_t name_width = std::max<std::size_t>(8, dataset.size() + 2);
  std::ostringstream out;
  out << pad("Dataset", name_width, true);
  for (const ModeResult& r : results) out << pad(std::string(mode_label(r.mode)), 8);
  out << '\n';
  out << pad(std::string(dataset), name_width, true);
  for (const ModeResult& r : results) out << pad(fixed(100.0 * r.test.acc2, 2), 8);
  out << "\n\n";
  out << "Test metrics (" << to_string(task) << " task)\n";
  out << pad("Mode", 8, true) << pad("Acc-2", 8) << pad("F1", 8) << pad("MAE", 8)
      << pad("Corr", 8) << pad("Acc-7", 8) << pad("Train", 8) << pad("Test", 8) << '\n';
  for (const ModeResult& r : results) {
    out << pad(std::string(mode_label(r.mode)), 8, true) << pad(fixed(100.0 * r.test.acc2, 2), 8)
        << pad(fixed(100.0 * r.test.f1, 2), 8) << pad(fixed(r.test.mae, 4), 8)
        << pad(fixed(r.test.corr, 4), 8)
        << pad(r.test.acc7 ? fixed(100.0 * *r.test.acc7, 2) : std::string("-"), 8)
        << pad(std::to_string(r.train_count), 8) << pad(std::to_string(r.test.count), 8)
        << '\n';
  }
  return out.str();
}

std::string ablation_json(std::string_view dataset, Task task,
                          std::span<const ModeResult> results) {
  using nlohmann::json;
  auto metrics = [](const Metrics& m) {
    return json{{"count", m.count}, {"acc2", m.acc2}, {"f1", m.f1}, {"mae", m.mae},
                {"corr", m.corr},   {"acc7", m.acc7 ? json(*m.acc7) : json(nullptr)}};
  };
  json modes = json::array();
  for (const ModeResult& r : results)
    modes.push_back({{"mode", std::string(mode_label(r.mode))},
                     {"key", std::string(mode_key(r.mode))},
                     {"train_count", r.train_count},
                     {"final_loss", r.final_loss},
                     {"train", metrics(r.train)},
                     {"test", metrics(r.test)}});
  json doc = {{"dataset", std::string(dataset)},
              {"task", std::string(to_string(task))},
              {"model", "ngram-linear"},
              {"primary_metric", "acc2"},
              {"results", std::move(modes)}};
  return doc.dump(2) + "\n";
}

}  // namespace nvtext
