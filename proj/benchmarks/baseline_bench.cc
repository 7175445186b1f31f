// benchmarks/baseline_bench.cc

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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "nvtext/baseline.h"
#include "nvtext/random.h"

namespace nvtext {
namespace {

void BM_TrainLogistic(benchmark::State& state) {
  Rng rng(5);
  const std::vector<std::string> words{"good", "bad", "fine", "movie", "the", "plot", "was"};
  std::vector<std::string> docs;
  std::vector<double> labels;
  for (int i = 0; i < state.range(0); ++i) {
    std::string doc;
    for (int w = 0; w < 8; ++w) doc += words[rng.index(words.size())] + " ";
    labels.push_back(doc.find("good") != std::string::npos ? 1.0 : 0.0);
    docs.push_back(doc);
  }
  const FeaturizerOptions opts;
  const NGramVocab vocab = NGramVocab::build(docs, opts.order);
  std::vector<Example> examples;
  for (std::size_t i = 0; i < docs.size(); ++i)
    examples.push_back({featurize(docs[i], vocab, opts), labels[i]});
  for (auto _ : state)
    benchmark::DoNotOptimize(train(examples, vocab.size(), Task::kBinary,
                                   TrainConfig::defaults(Task::kBinary)));
}
BENCHMARK(BM_TrainLogistic)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace nvtext
