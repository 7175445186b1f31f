// tests/fixture.h

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

#ifndef NVTEXT_TESTS_FIXTURE_H_
#define NVTEXT_TESTS_FIXTURE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "nvtext/alignment.h"
#include "nvtext/corpus_io.h"
#include "nvtext/model.h"

namespace nvtext::testing {

// One-segment dataset with hand-built codebooks; data/README.md traces the
// expected corpus line.
struct GoldenFixture {
  Segment segment;
  FrameSeries visual;
  FrameSeries acoustic;
  ClusterModel visual_model;
  ClusterModel acoustic_model;
};

inline ClusterModel identity_model(Modality modality, std::vector<std::string> names,
                                   const std::vector<std::vector<double>>& centroids,
                                   std::vector<std::vector<std::string>> phrases) {
  ClusterModel m;
  m.modality = modality;
  m.k = centroids.size();
  m.centroids = Matrix(0, names.size());
  for (const auto& c : centroids) m.centroids.append_row(c);
  m.standardizer.mean.assign(names.size(), 0.0);
  m.standardizer.stddev.assign(names.size(), 1.0);
  m.feature_names = std::move(names);
  m.max_iter = 300;
  m.rel_tol = 1e-6;
  m.silhouette = 0.5;
  for (std::size_t j = 0; j < phrases.size(); ++j)
    m.descriptors.push_back({j, std::move(phrases[j]), {}});
  return m;
}

inline GoldenFixture golden_fixture() {
  GoldenFixture f;
  f.segment = {"s1", "i loved it",
               {{"i", 0.0, 0.3}, {"loved", 0.3, 0.6}, {"it", 0.6, 0.9}},
               Label::sentiment(2.4)};

  const auto& vcols = expected_csv_columns(Modality::kVisual);
  std::vector<std::string> vnames(vcols.begin() + 1, vcols.end());
  const std::size_t au04 = 1, au12 = 6;  // AU02, AU04, AU05, AU06, AU07, AU09, AU12
  auto vrow = [&](double a, double b) {
    std::vector<double> r(vnames.size(), 0.0);
    r[au04] = a;
    r[au12] = b;
    return r;
  };
  Matrix vv(0, vnames.size());
  for (auto r : {vrow(1, 1), vrow(0.5, 1.5), vrow(1.5, 0.5), vrow(4, 4), vrow(4, 4),
                 vrow(4, 4), vrow(4.2, 3.8), vrow(4.2, 3.8), vrow(4.2, 3.8)})
    vv.append_row(r);
  const std::vector<double> vts{0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85};
  f.visual = make_frame_series(Modality::kVisual, vnames, vts, vv);
  f.visual_model = identity_model(Modality::kVisual, vnames, {vrow(1, 1), vrow(4, 4)},
                                  {{"brow lowerer"}, {"lip corner puller", "cheek raiser"}});
  f.visual_model.descriptors[0].action_units = {4};
  f.visual_model.descriptors[1].action_units = {12, 6};
  f.visual_model.abs_floor = 1.0;

  const auto& acols = expected_csv_columns(Modality::kAcoustic);
  std::vector<std::string> anames(acols.begin() + 1, acols.end());
  Matrix av(0, 4);
  av.append_row(std::vector<double>{0, 0, 0, 0});
  av.append_row(std::vector<double>{5, 0, 0, 0});
  const std::vector<double> ats{0.1, 0.4};
  f.acoustic = make_frame_series(Modality::kAcoustic, anames, ats, av);
  f.acoustic_model = identity_model(
      Modality::kAcoustic, anames, {{0, 0, 0, 0}, {5, 0, 0, 0}},
      {{"normal voice"}, {"high pitch", "normal loudness", "normal jitter", "normal shimmer"}});
  IntensityThresholds t;
  for (const std::string& n : anames) t.features.push_back({n, 0.0, 1.0, -1.0, 1.0});
  f.acoustic_model.thresholds = t;
  return f;
}

// Writes the fixture as an on-disk dataset and returns the manifest path.
inline std::filesystem::path write_golden_dataset(const GoldenFixture& f,
                                                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "frames");
  write_frames_csv(dir / "frames" / "s1.visual.csv", f.visual);
  write_frames_csv(dir / "frames" / "s1.acoustic.csv", f.acoustic);
  write_alignments(dir / "alignments.jsonl", std::vector<Segment>{f.segment});
  DatasetManifest m;
  m.dataset = "golden";
  m.alignments = dir / "alignments.jsonl";
  m.entries.push_back({"s1", Split::kTest, dir / "frames" / "s1.visual.csv",
                       dir / "frames" / "s1.acoustic.csv"});
  write_manifest(dir / "manifest.json", m);
  return dir / "manifest.json";
}

inline std::string golden_path() {
  return std::string(NVTEXT_TEST_DATA_DIR) + "/golden_corpus.jsonl";
}

}  // namespace nvtext::testing

#endif  // NVTEXT_TESTS_FIXTURE_H_
