// tools/cli.h

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

#ifndef NVTEXT_TOOLS_CLI_H_
#define NVTEXT_TOOLS_CLI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nvtext/alignment.h"
#include "nvtext/baseline.h"
#include "nvtext/clustering.h"
#include "nvtext/description.h"
#include "nvtext/synthgen.h"
#include "nvtext/textgen.h"

namespace nvtext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitProcessing = 1;
inline constexpr int kExitUsage = 2;

struct FitConfig {
  std::filesystem::path manifest;
  Modality modality = Modality::kVisual;
  std::size_t k_min = kDefaultKMin;
  std::size_t k_max = kDefaultKMax;
  std::uint64_t seed = 0;
  double abs_floor = kDefaultAbsFloor;
  double sigma_mult = kDefaultSigmaMultiplier;
  double fallback_window = kDefaultFallbackWindow;
  std::size_t max_iter = kDefaultMaxIter;
  double rel_tol = kDefaultRelTol;
  std::size_t silhouette_cap = kDefaultSilhouetteCap;
  std::optional<std::filesystem::path> au_catalog;
  std::filesystem::path out;
};

struct FitSummary {
  std::size_t k = 0;
  double silhouette = 0.0;
  std::size_t words = 0;
  std::size_t missing = 0;
};

/// Fits a codebook on the train split and writes the artifact to cfg.out.
FitSummary run_fit(const FitConfig& cfg, std::ostream& log);

struct TextualizeConfig {
  std::filesystem::path manifest;
  std::optional<std::filesystem::path> visual_model;
  std::optional<std::filesystem::path> acoustic_model;
  std::vector<AblationMode> modes{AblationMode::kTAV};
  double fallback_window = kDefaultFallbackWindow;
  bool strip_special_tokens = false;
  std::filesystem::path out;
};

struct TextualizeSummary {
  std::size_t records = 0;
  std::size_t skipped_words = 0;
};

TextualizeSummary run_textualize(const TextualizeConfig& cfg, std::ostream& log);

struct BaselineConfig {
  std::filesystem::path corpus;
  Task task = Task::kBinary;
  std::vector<AblationMode> modes{std::begin(kAllModes), std::end(kAllModes)};
  std::string dataset;  // corpus file stem when empty
  int order = 2;
  Weighting weighting = Weighting::kTfIdf;
  std::optional<double> learning_rate;
  std::optional<std::size_t> epochs;
  std::optional<double> l2;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;    // machine-readable JSON
  std::optional<std::filesystem::path> table;  // aligned text table
};

std::vector<ModeResult> run_baseline_cmd(const BaselineConfig& cfg, std::ostream& log);

struct SynthConfig {
  SynthSpec spec;
  std::filesystem::path out;
};

std::filesystem::path run_synth(const SynthConfig& cfg, std::ostream& log);

/// Parses argv and dispatches. Returns 0 on success, 1 on a processing
/// error and 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nvtext::cli

#endif  // NVTEXT_TOOLS_CLI_H_
