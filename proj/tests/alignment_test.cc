// tests/alignment_test.cc

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

#include "nvtext/alignment.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "test_util.h"

namespace nvtext {
namespace {

FrameSeries scalar_series(std::vector<double> ts, std::vector<double> vs) {
  Matrix m(0, 1);
  for (double v : vs) m.append_row(std::vector<double>{v});
  return make_frame_series(Modality::kAcoustic, {"x"}, ts, m);
}

TEST(SliceWordFeatures, ConstantWindowGivesConstant) {
  Matrix m(0, 3);
  std::vector<double> ts;
  for (int i = 0; i < 10; ++i) {
    ts.push_back(0.1 * i);
    m.append_row(std::vector<double>{0.5, 0.5, 0.5});
  }
  const FrameSeries f = make_frame_series(Modality::kVisual, {"a", "b", "c"}, ts, m);
  const auto v = slice_word_features(f, {"hi", 0.2, 0.6});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (std::vector<double>{0.5, 0.5, 0.5}));
}

TEST(SliceWordFeatures, HalfOpenMean) {
  const FrameSeries f = scalar_series({0.1, 0.2, 0.3}, {1, 2, 3});
  const auto v = slice_word_features(f, {"w", 0.05, 0.25});
  ASSERT_TRUE(v);
  EXPECT_DOUBLE_EQ((*v)[0], 1.5);
  // A frame exactly at the word end is excluded, at the start included.
  const auto w = slice_word_features(f, {"w", 0.2, 0.3});
  ASSERT_TRUE(w);
  EXPECT_DOUBLE_EQ((*w)[0], 2.0);
}

TEST(SliceWordFeatures, EmptyWindowFallsBackToNearestFrame) {
  const FrameSeries f = scalar_series({0.0, 1.0}, {7, 9});
  // Midpoint 0.9, nearest frame at midpoint + 0.1.
  const auto v = slice_word_features(f, {"w", 0.85, 0.95}, 0.25);
  ASSERT_TRUE(v);
  EXPECT_EQ((*v)[0], 9);
}

TEST(SliceWordFeatures, FallbackOutsideWindowIsMissing) {
  const FrameSeries f = scalar_series({0.0, 1.0}, {7, 9});
  EXPECT_FALSE(slice_word_features(f, {"w", 0.45, 0.55}, 0.25));
  EXPECT_FALSE(slice_word_features(scalar_series({}, {}), {"w", 0.0, 1.0}));
}

TEST(SliceWordFeatures, FallbackTieGoesToEarlierFrame) {
  const FrameSeries f = scalar_series({0.0, 1.0}, {7, 9});
  const auto v = slice_word_features(f, {"w", 0.49, 0.51}, 0.6);
  ASSERT_TRUE(v);
  EXPECT_EQ((*v)[0], 7);
}

// Brute-force oracle: scan every frame and average the ones inside the window.
std::optional<std::vector<double>> oracle_slice(const FrameSeries& f, const WordToken& w) {
  std::vector<double> sum(f.num_features(), 0.0);
  std::size_t n = 0;
  for (std::size_t r = 0; r < f.num_frames(); ++r) {
    if (f.timestamps[r] >= w.start && f.timestamps[r] < w.end) {
      for (std::size_t c = 0; c < f.num_features(); ++c) sum[c] += f.values(r, c);
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  for (double& s : sum) s /= static_cast<double>(n);
  return sum;
}

TEST(SliceWordFeatures, PropertyMatchesOracleAndStaysInRange) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t frames = 1 + rng.index(60);
    const std::size_t dim = 1 + rng.index(11);
    std::vector<double> ts(frames);
    double t = 0.0;
    for (double& x : ts) x = (t += rng.uniform(0.005, 0.05));
    const Matrix vals = testing::random_matrix(rng, frames, dim, 3.0);
    std::vector<std::string> names(dim, "f");
    for (std::size_t c = 0; c < dim; ++c) names[c] += std::to_string(c);
    const FrameSeries f = make_frame_series(Modality::kVisual, names, ts, vals);

    const double start = rng.uniform(0.0, t);
    const WordToken w{"w", start, start + rng.uniform(0.01, 0.5)};
    const auto got = slice_word_features(f, w, 0.0);
    const auto want = oracle_slice(f, w);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (!got) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      EXPECT_NEAR((*got)[c], (*want)[c], 1e-12);
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (std::size_t r = 0; r < frames; ++r) {
        if (ts[r] >= w.start && ts[r] < w.end) {
          lo = std::min(lo, vals(r, c));
          hi = std::max(hi, vals(r, c));
        }
      }
      EXPECT_GE((*got)[c], lo);
      EXPECT_LE((*got)[c], hi);
    }
  }
}

TEST(SliceWordFeatures, PropertyInvariantToFrameRowOrder) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t frames = 5 + rng.index(40);
    std::vector<double> ts(frames);
    for (std::size_t i = 0; i < frames; ++i) ts[i] = 0.02 * static_cast<double>(i);
    const Matrix vals = testing::random_matrix(rng, frames, 4);
    std::vector<std::size_t> perm(frames);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm.begin(), perm.end());
    std::vector<double> ts2;
    Matrix vals2;
    for (std::size_t p : perm) {
      ts2.push_back(ts[p]);
      vals2.append_row(vals.row(p));
    }
    const std::vector<std::string> names{"a", "b", "c", "d"};
    const FrameSeries f1 = make_frame_series(Modality::kVisual, names, ts, vals);
    const FrameSeries f2 = make_frame_series(Modality::kVisual, names, ts2, vals2);
    const double start = rng.uniform(0.0, 0.3);
    const WordToken word{"w", start, start + rng.uniform(0.01, 0.4)};
    EXPECT_EQ(slice_word_features(f1, word), slice_word_features(f2, word));
  }
}

TEST(FrameSeries, DropsNonFiniteRowsAndSorts) {
  Matrix m(0, 2);
  m.append_row(std::vector<double>{1, 2});
  m.append_row(std::vector<double>{std::nan(""), 2});
  m.append_row(std::vector<double>{3, 4});
  m.append_row(std::vector<double>{5, std::numeric_limits<double>::infinity()});
  const std::vector<double> ts{0.3, 0.2, 0.1, 0.0};
  const FrameSeries f = make_frame_series(Modality::kAcoustic, {"a", "b"}, ts, m);
  EXPECT_EQ(f.dropped_rows, 2u);
  ASSERT_EQ(f.num_frames(), 2u);
  EXPECT_EQ(f.timestamps, (std::vector<double>{0.1, 0.3}));
  EXPECT_EQ(f.values(0, 0), 3);
  EXPECT_NO_THROW(validate_frame_series(f));
}

TEST(FrameSeries, RejectsDuplicateTimestampsAndShapeMismatch) {
  Matrix m(2, 1, 0.0);
  const std::vector<double> dup{0.1, 0.1};
  EXPECT_THROW(make_frame_series(Modality::kVisual, {"a"}, dup, m), Error);
  const std::vector<double> one{0.1};
  EXPECT_THROW(make_frame_series(Modality::kVisual, {"a"}, one, m), Error);
  const std::vector<double> two{0.1, 0.2};
  EXPECT_THROW(make_frame_series(Modality::kVisual, {"a", "b"}, two, m), Error);
}

TEST(Segment, Validation) {
  Segment s{"s1", "a b", {{"a", 0.0, 0.5}, {"b", 0.5, 1.0}}, Label::sentiment(2.4)};
  EXPECT_NO_THROW(validate_segment(s));
  Segment equal = s;
  equal.words[0].end = 0.0;
  EXPECT_THROW(validate_segment(equal), Error);
  Segment overlap = s;
  overlap.words[1].start = 0.4;
  EXPECT_THROW(validate_segment(overlap), Error);
  Segment blank = s;
  blank.words[0].text = "  ";
  EXPECT_THROW(validate_segment(blank), Error);
  Segment range = s;
  range.label = Label::sentiment(3.5);
  EXPECT_THROW(validate_segment(range), Error);
}

TEST(AlignCorpus, CollectsVectorsAndMissingWords) {
  std::map<std::string, FrameSeries> frames;
  frames.emplace("s1", scalar_series({0.1, 0.2, 0.3}, {1, 2, 3}));
  const std::vector<Segment> segs{
      {"s1", "a b", {{"a", 0.05, 0.25}, {"b", 5.0, 6.0}}, Label::binary(true)}};
  const AlignmentResult r = align_corpus(segs, frames, Modality::kAcoustic);
  ASSERT_EQ(r.vectors.size(), 1u);
  EXPECT_EQ(r.vectors[0].segment_id, "s1");
  EXPECT_EQ(r.vectors[0].word_index, 0u);
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing[0].word_index, 1u);
  const Matrix stacked = stack_word_vectors(r.vectors);
  EXPECT_EQ(stacked.rows(), 1u);
  EXPECT_DOUBLE_EQ(stacked(0, 0), 1.5);
}

TEST(AlignCorpus, MissingSeriesAndWrongModalityAreErrors) {
  std::map<std::string, FrameSeries> frames;
  const std::vector<Segment> segs{{"s1", "a", {{"a", 0.0, 0.1}}, Label::binary(true)}};
  EXPECT_THROW(align_corpus(segs, frames, Modality::kAcoustic), Error);
  frames.emplace("s1", scalar_series({0.05}, {1}));
  EXPECT_THROW(align_corpus(segs, frames, Modality::kVisual), Error);
}

}  // namespace
}  // namespace nvtext
