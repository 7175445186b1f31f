// core/src/textgen.cc

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

#include "nvtext/textgen.h"

#include <algorithm>
#include <map>

#include "nvtext/clustering.h"

namespace nvtext {

namespace {

constexpr std::string_view kCls = "[CLS]";
constexpr std::string_view kSep = "[SEP]";
constexpr std::string_view kPrefix = "[CLS] ";
constexpr std::string_view kSuffix = " [SEP]";
constexpr std::string_view kInnerSep = " [SEP] ";
constexpr std::string_view kVisualLead = "Facial expressions shown: ";
constexpr std::string_view kAcousticLead = "Acoustic expressions shown: ";
constexpr std::string_view kAcousticJoin = " and acoustic expressions shown: ";

}  // namespace

std::string_view to_string(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

Split parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  if (name == "test") return Split::kTest;
  throw Error("unknown split '" + std::string(name) + "' (expected train, dev or test)");
}

std::string_view mode_key(AblationMode mode) {
  switch (mode) {
    case AblationMode::kT: return "t";
    case AblationMode::kTV: return "tv";
    case AblationMode::kTA: return "ta";
    case AblationMode::kTAV: return "tav";
  }
  return "t";
}

std::string_view mode_label(AblationMode mode) {
  switch (mode) {
    case AblationMode::kT: return "T";
    case AblationMode::kTV: return "T+V";
    case AblationMode::kTA: return "T+A";
    case AblationMode::kTAV: return "T+A+V";
  }
  return "T";
}

AblationMode parse_mode(std::string_view key) {
  for (AblationMode m : kAllModes)
    if (key == mode_key(m)) return m;
  throw Error("unknown ablation mode '" + std::string(key) +
              "' (expected t, tv, ta or tav)");
}

std::vector<AblationMode> parse_modes(std::string_view list) {
  std::vector<AblationMode> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const AblationMode m = parse_mode(list.substr(pos, comma - pos));
    if (std::find(out.begin(), out.end(), m) != out.end())
      throw Error("ablation mode '" + std::string(mode_key(m)) + "' listed twice");
    out.push_back(m);
    pos = comma + 1;
  }
  return out;
}

bool mode_uses_visual(AblationMode mode) {
  return mode == AblationMode::kTV || mode == AblationMode::kTAV;
}

bool mode_uses_acoustic(AblationMode mode) {
  return mode == AblationMode::kTA || mode == AblationMode::kTAV;
}

std::string generate_modality_text(std::span<const std::size_t> ids,
                                   std::span<const ClusterDescriptor> codebook) {
  struct Tally {
    std::size_t count = 0;
    std::size_t first = 0;
  };
  std::map<std::string_view, Tally> tally;
  std::size_t position = 0;
  for (std::size_t id : ids) {
    if (id >= codebook.size())
      throw Error("cluster id " + std::to_string(id) + " has no descriptor");
    for (const std::string& phrase : codebook[id].phrases) {
      auto [it, inserted] = tally.try_emplace(phrase, Tally{0, position});
      ++it->second.count;
      ++position;
    }
  }
  std::vector<std::pair<std::string_view, Tally>> ordered(tally.begin(), tally.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.second.count != b.second.count) return a.second.count > b.second.count;
    return a.second.first < b.second.first;
  });
  std::string out;
  for (const auto& [phrase, t] : ordered) {
    if (!out.empty()) out += ", ";
    out += phrase;
  }
  return out;
}

namespace {

void reject_markers(std::string_view field, std::string_view what) {
  if (field.find(kCls) != std::string_view::npos ||
      field.find(kSep) != std::string_view::npos)
    throw Error(std::string(what) + " must not contain [CLS] or [SEP]");
}

TextSpan append(std::string& out, std::string_view piece) {
  TextSpan span{out.size(), piece.size()};
  out += piece;
  return span;
}

}  // namespace

ExtendedText assemble_extended_text(std::string_view utterance, const NonverbalText& nv,
                                    AblationMode mode, const TemplateOptions& options) {
  reject_markers(utterance, "utterance text");
  reject_markers(nv.visual, "visual-text");
  reject_markers(nv.acoustic, "acoustic-text");
  if (mode_uses_visual(mode) && nv.visual.empty())
    throw Error("mode " + std::string(mode_label(mode)) + " requires visual-text");
  if (mode_uses_acoustic(mode) && nv.acoustic.empty())
    throw Error("mode " + std::string(mode_label(mode)) + " requires acoustic-text");

  ExtendedText out;
  out.mode = mode;
  std::string& s = out.text;
  if (!options.strip_special_tokens) s += kPrefix;
  out.utterance = append(s, utterance);
  out.visual = {s.size(), 0};
  out.acoustic = {s.size(), 0};
  switch (mode) {
    case AblationMode::kT:
      break;
    case AblationMode::kTV:
      s += kInnerSep;
      s += kVisualLead;
      out.visual = append(s, nv.visual);
      out.acoustic = {s.size(), 0};
      break;
    case AblationMode::kTA:
      s += kInnerSep;
      s += kAcousticLead;
      out.acoustic = append(s, nv.acoustic);
      break;
    case AblationMode::kTAV:
      s += kInnerSep;
      s += kVisualLead;
      out.visual = append(s, nv.visual);
      s += kAcousticJoin;
      out.acoustic = append(s, nv.acoustic);
      break;
  }
  if (!options.strip_special_tokens) s += kSuffix;
  return out;
}

ParsedExtendedText parse_extended_text(std::string_view text,
                                       const TemplateOptions& options) {
  std::string_view body = text;
  if (!options.strip_special_tokens) {
    if (!body.starts_with(kPrefix) || !body.ends_with(kSuffix) ||
        body.size() < kPrefix.size() + kSuffix.size())
      throw Error("extended text is not wrapped in [CLS] ... [SEP]");
    body = body.substr(kPrefix.size(), body.size() - kPrefix.size() - kSuffix.size());
  }
  ParsedExtendedText out;
  const std::size_t sep = body.find(kInnerSep);
  if (sep == std::string_view::npos) {
    out.mode = AblationMode::kT;
    out.utterance = body;
    return out;
  }
  out.utterance = body.substr(0, sep);
  std::string_view rest = body.substr(sep + kInnerSep.size());
  if (rest.starts_with(kVisualLead)) {
    rest.remove_prefix(kVisualLead.size());
    const std::size_t join = rest.find(kAcousticJoin);
    if (join == std::string_view::npos) {
      out.mode = AblationMode::kTV;
      out.visual = rest;
    } else {
      out.mode = AblationMode::kTAV;
      out.visual = rest.substr(0, join);
      out.acoustic = rest.substr(join + kAcousticJoin.size());
    }
  } else if (rest.starts_with(kAcousticLead)) {
    out.mode = AblationMode::kTA;
    out.acoustic = rest.substr(kAcousticLead.size());
  } else {
    throw Error("extended text has an unrecognized nonverbal section");
  }
  return out;
}

const ExtendedText* CorpusRecord::find(AblationMode mode) const {
  for (const ExtendedText& e : extended)
    if (e.mode == mode) return &e;
  return nullptr;
}

namespace {

struct ModalityText {
  std::vector<std::size_t> ids;
  std::string text;
  std::size_t missing = 0;
};

ModalityText describe_modality(const Segment& segment, Modality modality,
                               ModalityInputs inputs, bool required,
                               double fallback_window) {
  ModalityText out;
  const std::string name(to_string(modality));
  if (!inputs.frames || !inputs.model) {
    if (required)
      throw Error("segment '" + segment.id + "': " + name +
                  (inputs.model ? " frames" : " codebook") + " required but missing");
    return out;
  }
  const ClusterModel& model = *inputs.model;
  if (model.modality != modality)
    throw Error(name + " codebook was fitted on " + std::string(to_string(model.modality)) +
                " features");
  if (!model.has_descriptors())
    throw Error(name + " codebook has no cluster descriptors");
  if (inputs.frames->num_features() != model.feature_names.size())
    throw Error("segment '" + segment.id + "': " + name + " frames have " +
                std::to_string(inputs.frames->num_features()) +
                " features, codebook expects " +
                std::to_string(model.feature_names.size()));

  for (const WordToken& word : segment.words) {
    const auto values = slice_word_features(*inputs.frames, word, fallback_window);
    if (values)
      out.ids.push_back(assign_cluster(model, *values));
    else
      ++out.missing;
  }
  if (required && out.ids.empty())
    throw Error("segment '" + segment.id + "': every word is missing " + name +
                " features");
  out.text = generate_modality_text(out.ids, model.descriptors);
  return out;
}

}  // namespace

CorpusRecord textualize_segment(const Segment& segment, ModalityInputs visual,
                                ModalityInputs acoustic,
                                const TextualizeOptions& options) {
  const bool need_visual =
      std::any_of(options.modes.begin(), options.modes.end(), mode_uses_visual);
  const bool need_acoustic =
      std::any_of(options.modes.begin(), options.modes.end(), mode_uses_acoustic);

  ModalityText v = describe_modality(segment, Modality::kVisual, visual, need_visual,
                                     options.fallback_window);
  ModalityText a = describe_modality(segment, Modality::kAcoustic, acoustic,
                                     need_acoustic, options.fallback_window);

  CorpusRecord record;
  record.segment_id = segment.id;
  record.label = segment.label;
  record.text = segment.text;
  record.visual_text = std::move(v.text);
  record.acoustic_text = std::move(a.text);
  record.visual_ids = std::move(v.ids);
  record.acoustic_ids = std::move(a.ids);
  record.missing_words = v.missing + a.missing;
  const NonverbalText nv{record.visual_text, record.acoustic_text};
  for (AblationMode mode : options.modes)
    record.extended.push_back(
        assemble_extended_text(record.text, nv, mode, options.template_options));
  return record;
}

}  // namespace nvtext
