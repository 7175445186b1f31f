// core/include/nvtext/baseline.h

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

#ifndef NVTEXT_BASELINE_H_
#define NVTEXT_BASELINE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nvtext/common.h"
#include "nvtext/textgen.h"

namespace nvtext {

enum class Task { kBinary, kRegression };

std::string_view to_string(Task task);
/// Accepts "binary" or "regression".
Task parse_task(std::string_view name);

/// Lowercased maximal runs of ASCII letters and digits.
std::vector<std::string> tokenize(std::string_view text);

/// Unigrams, plus space-joined bigrams when order is 2.
std::vector<std::string> ngrams(std::span<const std::string> tokens, int order);

class NGramVocab {
 public:
  /// Indices follow lexicographic n-gram order, so they are dense and stable.
  static NGramVocab build(std::span<const std::string> documents, int order = 2,
                          std::size_t min_df = 1);

  int order() const { return order_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t num_documents() const { return num_documents_; }
  std::optional<std::size_t> index(std::string_view term) const;
  const std::string& term(std::size_t index) const { return terms_[index]; }
  std::size_t document_frequency(std::size_t index) const { return df_[index]; }
  /// ln((1 + N) / (1 + df)) + 1
  double idf(std::size_t index) const;

 private:
  int order_ = 1;
  std::size_t num_documents_ = 0;
  std::vector<std::string> terms_;
  std::vector<std::size_t> df_;
  std::map<std::string, std::size_t, std::less<>> lookup_;
};

enum class Weighting { kCounts, kTfIdf };

/// (index, value) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, double>>;

struct FeaturizerOptions {
  int order = 2;
  Weighting weighting = Weighting::kTfIdf;
  /// Scale each vector to unit Euclidean norm after weighting.
  bool l2_normalize = true;
};

/// Out-of-vocabulary n-grams are dropped; an empty text is the zero vector.
SparseVector featurize(std::string_view text, const NGramVocab& vocab,
                       const FeaturizerOptions& options = {});

struct Example {
  SparseVector x;
  double y = 0.0;
};

struct TrainConfig {
  double learning_rate = 1.0;
  std::size_t epochs = 500;
  double l2 = 1e-4;
  std::uint64_t seed = 0;
  /// Stddev of the seeded Gaussian initial weights.
  double init_scale = 0.01;

  /// Step sizes chosen for unit-norm features so full-batch descent is
  /// monotone: 1.0 for logistic loss, 0.2 for squared error.
  static TrainConfig defaults(Task task);
};

struct LinearModel {
  Task task = Task::kBinary;
  std::vector<double> weights;
  double bias = 0.0;
  TrainConfig config;
  /// Objective before the first step and after every epoch.
  std::vector<double> loss_history;
};

/// Mean logistic loss (binary, y in {0,1}) or mean squared error
/// (regression), plus l2 / 2 * |w|^2. The bias is not regularized.
double training_objective(std::span<const double> weights, double bias,
                          std::span<const Example> examples, Task task, double l2);

/// Gradient of training_objective; the last entry is d/d bias.
std::vector<double> training_gradient(std::span<const double> weights, double bias,
                                      std::span<const Example> examples, Task task,
                                      double l2);

/// Full-batch gradient descent.
LinearModel train(std::span<const Example> examples, std::size_t dim, Task task,
                  const TrainConfig& config);

/// Probability of the positive class (binary) or the regression score.
double predict(const LinearModel& model, const SparseVector& x);

struct Metrics {
  std::size_t count = 0;
  double acc2 = 0.0;
  double f1 = 0.0;
  double mae = 0.0;
  double corr = 0.0;
  std::optional<double> acc7;  // regression only
};

/// Regression: Acc-2 and F1 compare signs on items whose label is non-zero;
/// Acc-7 rounds (half to even) and clamps both sides to integers in [-3, 3].
/// Binary: predictions are probabilities thresholded at 0.5. F1 is the
/// support-weighted mean of the per-class F1 scores. A degenerate Pearson
/// correlation (zero variance) is reported as 0.
Metrics compute_metrics(std::span<const double> predictions, std::span<const double> labels,
                        Task task);

struct BaselineOptions {
  Task task = Task::kBinary;
  FeaturizerOptions features;
  std::optional<TrainConfig> config;  // TrainConfig::defaults(task) when unset
};

struct ModeResult {
  AblationMode mode = AblationMode::kT;
  std::size_t train_count = 0;
  Metrics train;
  Metrics test;
  double final_loss = 0.0;
};

/// Trains on the train split and evaluates on the test split using the
/// extended text of `mode`. Regression needs sentiment labels; binary
/// accepts binary labels or sentiment labels binarized by sign, dropping
/// zero-labeled records.
ModeResult run_baseline(std::span<const CorpusRecord> records, AblationMode mode,
                        const BaselineOptions& options);

/// Rows = datasets, columns = modes, cells = test Acc-2 in percent, followed
/// by a per-mode block with every metric.
std::string format_ablation_table(std::string_view dataset, Task task,
                                  std::span<const ModeResult> results);
/// Machine-readable form of the same results (one JSON document).
std::string ablation_json(std::string_view dataset, Task task,
                          std::span<const ModeResult> results);

}  // namespace nvtext

#endif  // NVTEXT_BASELINE_H_
