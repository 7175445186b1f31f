// core/include/nvtext/synthgen.h

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

#ifndef NVTEXT_SYNTHGEN_H_
#define NVTEXT_SYNTHGEN_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nvtext/alignment.h"
#include "nvtext/common.h"
#include "nvtext/corpus_io.h"

namespace nvtext {

enum class LabelRule { kFromAcousticCluster, kFromTextToken, kRandom };

std::string_view to_string(LabelRule rule);
/// Accepts "acoustic-cluster", "text-token" or "random".
LabelRule parse_label_rule(std::string_view name);

/// Knobs of the synthetic corpus generator.
///
/// Each word draws a planted cluster per modality: the segment's dominant
/// cluster with probability `dominant_prob`, otherwise a uniform one. The
/// word vector is the cluster centroid plus unit Gaussian noise, in units of
/// the within-cluster stddev; centroids are at least `separation` apart.
struct SynthSpec {
  std::uint64_t seed = 0;
  std::string dataset = "synthetic";
  std::size_t visual_clusters = 4;
  std::size_t acoustic_clusters = 4;
  double separation = 10.0;
  std::size_t words_per_segment = 8;
  std::size_t segments = 250;
  double dominant_prob = 0.9;
  LabelRule label_rule = LabelRule::kFromAcousticCluster;
  LabelKind label_kind = LabelKind::kBinary;
  /// Token whose presence makes the label positive under kFromTextToken.
  std::string label_token = "good";
  double visual_fps = 30.0;
  double acoustic_fps = 100.0;
  /// Per-frame jitter around the word vector, zero mean.
  double frame_noise = 0.1;
  double train_fraction = 0.7;
  double dev_fraction = 0.15;
};

/// Throws Error when the spec is infeasible.
void validate_synth_spec(const SynthSpec& spec);

struct SynthSegmentTruth {
  std::string segment_id;
  std::size_t dominant_visual = 0;
  std::size_t dominant_acoustic = 0;
  std::vector<std::size_t> visual_ids;
  std::vector<std::size_t> acoustic_ids;
};

struct SynthCorpus {
  SynthSpec spec;
  std::vector<Segment> segments;
  std::vector<Split> splits;  // parallel to segments
  std::map<std::string, FrameSeries> visual;
  std::map<std::string, FrameSeries> acoustic;
  std::vector<SynthSegmentTruth> truth;  // parallel to segments
  /// Planted centroids in noise-stddev units (before the raw-unit mapping).
  Matrix visual_centroids;
  Matrix acoustic_centroids;
};

/// The fixed vocabulary utterances are drawn from.
const std::vector<std::string>& synth_vocabulary();

SynthCorpus gen_corpus(const SynthSpec& spec);

/// Writes manifest.json, alignments.jsonl, visual/*.csv, acoustic/*.csv,
/// ground_truth.jsonl and synth_spec.json under `dir`. Returns the manifest path.
std::filesystem::path write_synth_corpus(const SynthCorpus& corpus,
                                         const std::filesystem::path& dir);

std::vector<SynthSegmentTruth> read_ground_truth(const std::filesystem::path& path);

}  // namespace nvtext

#endif  // NVTEXT_SYNTHGEN_H_
