// core/src/synthgen.cc

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

#include "nvtext/synthgen.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "json.hpp"
#include "nvtext/random.h"

namespace nvtext {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(LabelRule rule) {
  switch (rule) {
    case LabelRule::kFromAcousticCluster: return "acoustic-cluster";
    case LabelRule::kFromTextToken: return "text-token";
    case LabelRule::kRandom: return "random";
  }
  return "random";
}

LabelRule parse_label_rule(std::string_view name) {
  if (name == "acoustic-cluster") return LabelRule::kFromAcousticCluster;
  if (name == "text-token") return LabelRule::kFromTextToken;
  if (name == "random") return LabelRule::kRandom;
  throw Error("unknown label rule '" + std::string(name) +
              "' (expected acoustic-cluster, text-token or random)");
}

const std::vector<std::string>& synth_vocabulary() {
  static const std::vector<std::string> words = {
      "i",     "you",   "it",    "the",   "a",      "movie", "was",   "is",
      "really", "kind", "of",    "just",  "so",     "and",   "that",  "this",
      "good",  "plot",  "story", "actor", "scene",  "think", "know",  "like",
      "time",  "very",  "but",   "not",   "all",    "what",  "there", "people",
      "show",  "thing", "watch", "went",  "saw",    "mean",  "well",  "then"};
  return words;
}

void validate_synth_spec(const SynthSpec& spec) {
  if (spec.visual_clusters < 1 || spec.acoustic_clusters < 1)
    throw Error("synth: cluster counts must be >= 1");
  if (spec.segments < 1 || spec.words_per_segment < 1)
    throw Error("synth: segment and word counts must be >= 1");
  if (!(spec.separation > 0.0)) throw Error("synth: separation must be > 0");
  const std::size_t capacity = spec.segments * spec.words_per_segment;
  const std::size_t k = std::max(spec.visual_clusters, spec.acoustic_clusters);
  if (k > capacity)
    throw Error("synth: " + std::to_string(k) + " clusters exceed the " +
                std::to_string(capacity) + " words the corpus holds");
  if (!(spec.dominant_prob >= 0.0 && spec.dominant_prob <= 1.0))
    throw Error("synth: dominant_prob must lie in [0, 1]");
  if (!(spec.visual_fps > 0.0) || !(spec.acoustic_fps > 0.0))
    throw Error("synth: frame rates must be positive");
  if (!(spec.frame_noise >= 0.0)) throw Error("synth: frame_noise must be >= 0");
  if (!(spec.train_fraction > 0.0) || !(spec.dev_fraction >= 0.0) ||
      spec.train_fraction + spec.dev_fraction > 1.0)
    throw Error("synth: split fractions must be positive and sum to at most 1");
}

namespace {

// Raw-unit mapping: raw = offset + scale * z.
struct FeatureScale {
  double offset;
  double scale;
};

// AU intensities sit near 0.5 and rise to ~4.7 for an elevated AU.
constexpr FeatureScale kVisualScale{0.5, 0.6};
// pitch (Hz), loudness, jitter, shimmer.
constexpr FeatureScale kAcousticScale[] = {
    {180.0, 10.0}, {1.0, 0.1}, {0.02, 0.002}, {0.1, 0.01}};

// Centroids on signed coordinate axes when they fit (pairwise distance at
// least separation), otherwise rejection-sampled on a sphere.
Matrix place_centroids(std::size_t k, std::size_t dim, double separation, bool positive_only,
                       Rng& rng) {
  const double radius = separation / std::sqrt(2.0);
  std::vector<std::pair<std::size_t, double>> slots;
  for (std::size_t a = 0; a < dim; ++a) {
    slots.emplace_back(a, 1.0);
    if (!positive_only) slots.emplace_back(a, -1.0);
  }
  Matrix centroids(0, dim);
  if (k <= slots.size()) {
    rng.shuffle(slots.begin(), slots.end());
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<double> c(dim, 0.0);
      c[slots[j].first] = slots[j].second * radius;
      centroids.append_row(c);
    }
    return centroids;
  }
  const double shell = separation * std::sqrt(static_cast<double>(k));
  for (std::size_t attempt = 0; centroids.rows() < k; ++attempt) {
    if (attempt > 100000) throw Error("synth: could not place well-separated centroids");
    std::vector<double> c(dim);
    double norm = 0.0;
    for (double& v : c) {
      v = rng.normal();
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (double& v : c) v = v / norm * shell;
    if (positive_only)
      for (double& v : c) v = std::abs(v);
    bool ok = true;
    for (std::size_t r = 0; r < centroids.rows() && ok; ++r)
      ok = std::sqrt(squared_distance(c, centroids.row(r))) >= separation;
    if (ok) centroids.append_row(c);
  }
  return centroids;
}

std::string segment_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "seg%05zu", index);
  return buf;
}

double to_raw(Modality modality, std::size_t feature, double z) {
  const FeatureScale s =
      modality == Modality::kVisual ? kVisualScale : kAcousticScale[feature];
  return s.offset + s.scale * z;
}

FrameSeries synth_frames(Modality modality, const std::vector<WordToken>& words,
                         const std::vector<std::vector<double>>& word_z, double fps,
                         double frame_noise, Rng& rng) {
  const auto& columns = expected_csv_columns(modality);
  std::vector<std::string> names(columns.begin() + 1, columns.end());
  const std::size_t dim = names.size();
  const double end_time = words.back().end + 0.1;
  const auto frames = static_cast<std::size_t>(std::ceil(end_time * fps));
  std::vector<double> timestamps;
  Matrix values(0, dim);
  std::vector<double> row(dim);
  std::size_t w = 0;
  for (std::size_t f = 0; f < frames; ++f) {
    const double t = static_cast<double>(f) / fps;
    while (w < words.size() && t >= words[w].end) ++w;
    const bool inside = w < words.size() && t >= words[w].start;
    for (std::size_t c = 0; c < dim; ++c) {
      const double z = inside ? word_z[w][c] + frame_noise * rng.normal() : rng.normal();
      row[c] = to_raw(modality, c, z);
    }
    timestamps.push_back(t);
    values.append_row(row);
  }
  return make_frame_series(modality, std::move(names), timestamps, values);
}

}  // namespace

SynthCorpus gen_corpus(const SynthSpec& spec) {
  validate_synth_spec(spec);
  Rng rng(spec.seed);
  SynthCorpus out;
  out.spec = spec;
  const std::size_t visual_dim = expected_csv_columns(Modality::kVisual).size() - 1;
  const std::size_t acoustic_dim = expected_csv_columns(Modality::kAcoustic).size() - 1;
  out.visual_centroids =
      place_centroids(spec.visual_clusters, visual_dim, spec.separation, true, rng);
  out.acoustic_centroids =
      place_centroids(spec.acoustic_clusters, acoustic_dim, spec.separation, false, rng);

  const auto& vocab = synth_vocabulary();
  auto draw_cluster = [&](std::size_t dominant, std::size_t k) {
    return rng.bernoulli(spec.dominant_prob) ? dominant : rng.index(k);
  };
  auto draw_vector = [&](const Matrix& centroids, std::size_t id) {
    std::vector<double> z(centroids.cols());
    for (std::size_t c = 0; c < z.size(); ++c) z[c] = centroids(id, c) + rng.normal();
    return z;
  };

  for (std::size_t s = 0; s < spec.segments; ++s) {
    Segment seg;
    seg.id = segment_name(s);
    SynthSegmentTruth truth;
    truth.segment_id = seg.id;
    truth.dominant_visual = rng.index(spec.visual_clusters);
    truth.dominant_acoustic = rng.index(spec.acoustic_clusters);

    std::vector<std::vector<double>> vz, az;
    double t = rng.uniform(0.05, 0.3);
    std::string text;
    for (std::size_t w = 0; w < spec.words_per_segment; ++w) {
      WordToken token;
      token.text = vocab[rng.index(vocab.size())];
      token.start = t;
      token.end = t + rng.uniform(0.2, 0.5);
      t = token.end + rng.uniform(0.02, 0.1);
      const std::size_t v = draw_cluster(truth.dominant_visual, spec.visual_clusters);
      const std::size_t a = draw_cluster(truth.dominant_acoustic, spec.acoustic_clusters);
      truth.visual_ids.push_back(v);
      truth.acoustic_ids.push_back(a);
      vz.push_back(draw_vector(out.visual_centroids, v));
      az.push_back(draw_vector(out.acoustic_centroids, a));
      if (!text.empty()) text += ' ';
      text += token.text;
      seg.words.push_back(std::move(token));
    }
    seg.text = text;

    const bool binary = spec.label_kind == LabelKind::kBinary;
    switch (spec.label_rule) {
      case LabelRule::kFromAcousticCluster: {
        const std::size_t k = spec.acoustic_clusters;
        if (binary) {
          seg.label = Label::binary(truth.dominant_acoustic < (k + 1) / 2);
        } else {
          const double pos = k == 1 ? 0.5
                                    : static_cast<double>(truth.dominant_acoustic) /
                                          static_cast<double>(k - 1);
          seg.label = Label::sentiment(3.0 - 6.0 * pos);
        }
        break;
      }
      case LabelRule::kFromTextToken: {
        const bool present = std::any_of(seg.words.begin(), seg.words.end(),
                                         [&](const WordToken& w) {
                                           return w.text == spec.label_token;
                                         });
        seg.label = binary ? Label::binary(present) : Label::sentiment(present ? 2.0 : -2.0);
        break;
      }
      case LabelRule::kRandom:
        seg.label = binary ? Label::binary(rng.bernoulli(0.5))
                           : Label::sentiment(rng.uniform(-3.0, 3.0));
        break;
    }

    out.visual.emplace(seg.id, synth_frames(Modality::kVisual, seg.words, vz,
                                            spec.visual_fps, spec.frame_noise, rng));
    out.acoustic.emplace(seg.id, synth_frames(Modality::kAcoustic, seg.words, az,
                                              spec.acoustic_fps, spec.frame_noise, rng));
    out.segments.push_back(std::move(seg));
    out.truth.push_back(std::move(truth));
  }

  std::vector<std::size_t> order(spec.segments);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order.begin(), order.end());
  const auto n = static_cast<double>(spec.segments);
  const auto train_end = static_cast<std::size_t>(std::llround(spec.train_fraction * n));
  const auto dev_end = static_cast<std::size_t>(
      std::llround((spec.train_fraction + spec.dev_fraction) * n));
  out.splits.assign(spec.segments, Split::kTest);
  for (std::size_t i = 0; i < order.size(); ++i)
    out.splits[order[i]] = i < train_end ? Split::kTrain : i < dev_end ? Split::kDev : Split::kTest;
  return out;
}

fs::path write_synth_corpus(const SynthCorpus& corpus, const fs::path& dir) {
  fs::create_directories(dir / "visual");
  fs::create_directories(dir / "acoustic");
  DatasetManifest manifest;
  manifest.dataset = corpus.spec.dataset;
  manifest.alignments = dir / "alignments.jsonl";
  write_alignments(manifest.alignments, corpus.segments);
  for (std::size_t i = 0; i < corpus.segments.size(); ++i) {
    const std::string& id = corpus.segments[i].id;
    ManifestEntry e;
    e.id = id;
    e.split = corpus.splits[i];
    e.visual = dir / "visual" / (id + ".csv");
    e.acoustic = dir / "acoustic" / (id + ".csv");
    write_frames_csv(*e.visual, corpus.visual.at(id));
    write_frames_csv(*e.acoustic, corpus.acoustic.at(id));
    manifest.entries.push_back(std::move(e));
  }
  const fs::path manifest_path = dir / "manifest.json";
  write_manifest(manifest_path, manifest);

  {
    std::ofstream out(dir / "ground_truth.jsonl", std::ios::binary | std::ios::trunc);
    for (const SynthSegmentTruth& t : corpus.truth)
      out << json{{"segment_id", t.segment_id},
                  {"dominant_visual", t.dominant_visual},
                  {"dominant_acoustic", t.dominant_acoustic},
                  {"visual_ids", t.visual_ids},
                  {"acoustic_ids", t.acoustic_ids}}
                 .dump()
          << '\n';
    if (!out) throw Error("failed writing ground truth under " + dir.string());
  }
  {
    const SynthSpec& s = corpus.spec;
    const json spec = {{"seed", s.seed},
                       {"dataset", s.dataset},
                       {"visual_clusters", s.visual_clusters},
                       {"acoustic_clusters", s.acoustic_clusters},
                       {"separation", s.separation},
                       {"words_per_segment", s.words_per_segment},
                       {"segments", s.segments},
                       {"dominant_prob", s.dominant_prob},
                       {"label_rule", std::string(to_string(s.label_rule))},
                       {"label_kind", s.label_kind == LabelKind::kBinary ? "binary" : "sentiment"},
                       {"label_token", s.label_token},
                       {"visual_fps", s.visual_fps},
                       {"acoustic_fps", s.acoustic_fps},
                       {"frame_noise", s.frame_noise},
                       {"train_fraction", s.train_fraction},
                       {"dev_fraction", s.dev_fraction}};
    std::ofstream out(dir / "synth_spec.json", std::ios::binary | std::ios::trunc);
    out << spec.dump(2) << '\n';
    if (!out) throw Error("failed writing synth_spec.json under " + dir.string());
  }
  return manifest_path;
}

std::vector<SynthSegmentTruth> read_ground_truth(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ground truth " + path.string());
  std::vector<SynthSegmentTruth> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      out.push_back({j.at("segment_id").get<std::string>(),
                     j.at("dominant_visual").get<std::size_t>(),
                     j.at("dominant_acoustic").get<std::size_t>(),
                     j.at("visual_ids").get<std::vector<std::size_t>>(),
                     j.at("acoustic_ids").get<std::vector<std::size_t>>()});
    } catch (const json::exception& e) {
      throw Error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace nvtext
