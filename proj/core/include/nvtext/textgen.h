// core/include/nvtext/textgen.h

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

#ifndef NVTEXT_TEXTGEN_H_
#define NVTEXT_TEXTGEN_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nvtext/alignment.h"
#include "nvtext/common.h"
#include "nvtext/model.h"

namespace nvtext {

/// Which nonverbal fields accompany the utterance text.
enum class AblationMode { kT, kTV, kTA, kTAV };

inline constexpr AblationMode kAllModes[] = {AblationMode::kT, AblationMode::kTV,
                                             AblationMode::kTA, AblationMode::kTAV};

/// "t", "tv", "ta", "tav".
std::string_view mode_key(AblationMode mode);
/// "T", "T+V", "T+A", "T+A+V".
std::string_view mode_label(AblationMode mode);
AblationMode parse_mode(std::string_view key);
/// Comma separated list of mode keys, e.g. "t,tav". Duplicates are rejected.
std::vector<AblationMode> parse_modes(std::string_view list);
bool mode_uses_visual(AblationMode mode);
bool mode_uses_acoustic(AblationMode mode);

struct NonverbalText {
  std::string visual;
  std::string acoustic;
};

/// Byte range inside ExtendedText::text.
struct TextSpan {
  std::size_t offset = 0;
  std::size_t length = 0;

  bool operator==(const TextSpan&) const = default;
};

struct ExtendedText {
  std::string text;
  AblationMode mode = AblationMode::kT;
  TextSpan utterance;
  TextSpan visual;    // empty unless the mode uses visual-text
  TextSpan acoustic;  // empty unless the mode uses acoustic-text

  std::string_view component(TextSpan span) const {
    return std::string_view(text).substr(span.offset, span.length);
  }
};

struct TemplateOptions {
  /// Omit the leading "[CLS] " and trailing " [SEP]" for tokenizers that add
  /// their own special tokens. The inner separator is kept.
  bool strip_special_tokens = false;
};

/// Expands each id into its cluster phrases, orders phrases by occurrence
/// count (descending, ties by first occurrence), removes repeats and joins
/// with ", ". An empty sequence yields an empty string.
std::string generate_modality_text(std::span<const std::size_t> ids,
                                   std::span<const ClusterDescriptor> codebook);

/// Fills the template of `mode`:
///   T    [CLS] {text} [SEP]
///   TV   [CLS] {text} [SEP] Facial expressions shown: {visual} [SEP]
///   TA   [CLS] {text} [SEP] Acoustic expressions shown: {acoustic} [SEP]
///   TAV  [CLS] {text} [SEP] Facial expressions shown: {visual} and acoustic
///        expressions shown: {acoustic} [SEP]
/// Throws if a field the mode needs is empty or any field contains a
/// separator literal.
ExtendedText assemble_extended_text(std::string_view utterance, const NonverbalText& nv,
                                    AblationMode mode,
                                    const TemplateOptions& options = {});

struct ParsedExtendedText {
  AblationMode mode = AblationMode::kT;
  std::string utterance;
  std::string visual;
  std::string acoustic;
};

/// Inverse of assemble_extended_text, splitting on the literal markers.
ParsedExtendedText parse_extended_text(std::string_view text,
                                       const TemplateOptions& options = {});

struct CorpusRecord {
  std::string segment_id;
  Split split = Split::kTrain;
  Label label;
  std::string text;
  std::string visual_text;
  std::string acoustic_text;
  std::vector<std::size_t> visual_ids;
  std::vector<std::size_t> acoustic_ids;
  std::vector<ExtendedText> extended;
  /// Words skipped because no frame could be sliced, summed over modalities.
  std::size_t missing_words = 0;

  const ExtendedText* find(AblationMode mode) const;
};

/// Frames and codebook of one modality; either may be absent.
struct ModalityInputs {
  const FrameSeries* frames = nullptr;
  const ClusterModel* model = nullptr;
};

struct TextualizeOptions {
  std::vector<AblationMode> modes{AblationMode::kTAV};
  double fallback_window = kDefaultFallbackWindow;
  TemplateOptions template_options;
};

/// Slices, assigns and describes one segment, then assembles an extended
/// text for every requested mode. A modality needed by some mode must have
/// frames, a described codebook, and at least one non-missing word.
CorpusRecord textualize_segment(const Segment& segment, ModalityInputs visual,
                                ModalityInputs acoustic,
                                const TextualizeOptions& options);

}  // namespace nvtext

#endif  // NVTEXT_TEXTGEN_H_
