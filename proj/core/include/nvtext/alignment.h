// core/include/nvtext/alignment.h

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

#ifndef NVTEXT_ALIGNMENT_H_
#define NVTEXT_ALIGNMENT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nvtext/common.h"

namespace nvtext {

inline constexpr double kDefaultFallbackWindow = 0.25;

/// Frame-level features of one modality for one segment. Rows of `values`
/// correspond to `timestamps`, which are strictly increasing.
struct FrameSeries {
  Modality modality = Modality::kVisual;
  std::vector<std::string> feature_names;
  std::vector<double> timestamps;
  Matrix values;
  /// Rows discarded at ingestion because they held a non-finite value.
  std::size_t dropped_rows = 0;

  std::size_t num_frames() const { return timestamps.size(); }
  std::size_t num_features() const { return feature_names.size(); }
};

/// Builds a canonical FrameSeries from rows in arbitrary order. Rows with any
/// non-finite entry (timestamp included) are dropped and counted; the rest
/// are sorted by timestamp. Duplicate timestamps are rejected.
FrameSeries make_frame_series(Modality modality,
                              std::vector<std::string> feature_names,
                              std::span<const double> timestamps,
                              const Matrix& values);

/// Throws Error if `frames` violates a FrameSeries invariant.
void validate_frame_series(const FrameSeries& frames);

struct WordToken {
  std::string text;
  double start = 0.0;
  double end = 0.0;
};

enum class LabelKind { kSentiment, kBinary };

/// Sentiment labels are reals in [-3, 3]; binary labels are 0 or 1.
struct Label {
  LabelKind kind = LabelKind::kSentiment;
  double value = 0.0;

  static Label sentiment(double v) { return {LabelKind::kSentiment, v}; }
  static Label binary(bool v) { return {LabelKind::kBinary, v ? 1.0 : 0.0}; }

  bool operator==(const Label&) const = default;
};

struct Segment {
  std::string id;
  std::string text;
  std::vector<WordToken> words;
  Label label;
};

/// Throws Error on an invalid word or overlapping/unordered words.
void validate_segment(const Segment& segment);

struct WordVector {
  std::string segment_id;
  std::size_t word_index = 0;
  Modality modality = Modality::kVisual;
  std::vector<double> values;
};

/// Mean of the frames whose timestamp falls in [word.start, word.end). If no
/// frame falls inside, the frame nearest the word midpoint is used provided
/// it lies within `fallback_window` seconds (ties go to the earlier frame).
/// Returns nullopt when neither rule yields a frame.
std::optional<std::vector<double>> slice_word_features(
    const FrameSeries& frames, const WordToken& word,
    double fallback_window = kDefaultFallbackWindow);

struct MissingWord {
  std::string segment_id;
  std::size_t word_index = 0;
  std::string reason;
};

struct AlignmentResult {
  std::vector<WordVector> vectors;
  std::vector<MissingWord> missing;
};

/// Word vectors for every segment, in (segment, word_index) order. Every
/// segment must have an entry in `frames`.
AlignmentResult align_corpus(std::span<const Segment> segments,
                             const std::map<std::string, FrameSeries>& frames,
                             Modality modality,
                             double fallback_window = kDefaultFallbackWindow);

/// Stacks WordVector values into a matrix, one row per vector.
Matrix stack_word_vectors(std::span<const WordVector> vectors);

}  // namespace nvtext

#endif  // NVTEXT_ALIGNMENT_H_
