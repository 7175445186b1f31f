// core/src/alignment.cc

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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace nvtext {

std::string_view to_string(Modality modality) {
  return modality == Modality::kVisual ? "visual" : "acoustic";
}

Modality parse_modality(std::string_view name) {
  if (name == "visual") return Modality::kVisual;
  if (name == "acoustic") return Modality::kAcoustic;
  throw Error("unknown modality '" + std::string(name) +
              "' (expected visual or acoustic)");
}

FrameSeries make_frame_series(Modality modality,
                              std::vector<std::string> feature_names,
                              std::span<const double> timestamps,
                              const Matrix& values) {
  if (values.rows() != timestamps.size())
    throw Error("frame series: " + std::to_string(timestamps.size()) +
                " timestamps but " + std::to_string(values.rows()) + " rows");
  if (values.rows() > 0 && values.cols() != feature_names.size())
    throw Error("frame series: " + std::to_string(feature_names.size()) +
                " feature names but " + std::to_string(values.cols()) +
                " columns");

  std::vector<std::size_t> kept;
  kept.reserve(timestamps.size());
  std::size_t dropped = 0;
  for (std::size_t r = 0; r < timestamps.size(); ++r) {
    const auto row = values.row(r);
    const bool finite = std::isfinite(timestamps[r]) &&
                        std::all_of(row.begin(), row.end(),
                                    [](double v) { return std::isfinite(v); });
    if (finite)
      kept.push_back(r);
    else
      ++dropped;
  }
  // Stable so equal timestamps keep a reproducible order for the error below.
  std::stable_sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    return timestamps[a] < timestamps[b];
  });

  FrameSeries out;
  out.modality = modality;
  out.feature_names = std::move(feature_names);
  out.dropped_rows = dropped;
  out.timestamps.reserve(kept.size());
  out.values = Matrix(0, out.feature_names.size());
  for (std::size_t r : kept) {
    if (!out.timestamps.empty() && out.timestamps.back() == timestamps[r]) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "frame series: duplicate timestamp " << timestamps[r];
      throw Error(msg.str());
    }
    out.timestamps.push_back(timestamps[r]);
    out.values.append_row(values.row(r));
  }
  return out;
}

void validate_frame_series(const FrameSeries& frames) {
  if (frames.values.rows() != frames.timestamps.size())
    throw Error("frame series: row count does not match timestamp count");
  if (frames.values.rows() > 0 &&
      frames.values.cols() != frames.feature_names.size())
    throw Error("frame series: column count does not match feature names");
  for (std::size_t i = 1; i < frames.timestamps.size(); ++i)
    if (!(frames.timestamps[i - 1] < frames.timestamps[i]))
      throw Error("frame series: timestamps not strictly increasing at row " +
                  std::to_string(i));
  for (double v : frames.values.data())
    if (!std::isfinite(v)) throw Error("frame series: non-finite value");
}

namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

void validate_segment(const Segment& segment) {
  for (std::size_t i = 0; i < segment.words.size(); ++i) {
    const WordToken& w = segment.words[i];
    const std::string where =
        "segment '" + segment.id + "' word " + std::to_string(i);
    if (blank(w.text)) throw Error(where + ": empty word text");
    if (!std::isfinite(w.start) || !std::isfinite(w.end))
      throw Error(where + ": non-finite timing");
    if (!(w.start < w.end)) throw Error(where + ": start must be < end");
    if (i > 0 && w.start < segment.words[i - 1].end)
      throw Error(where + ": overlaps or precedes the previous word");
  }
  if (segment.label.kind == LabelKind::kSentiment &&
      !(segment.label.value >= -3.0 && segment.label.value <= 3.0))
    throw Error("segment '" + segment.id + "': sentiment label outside [-3, 3]");
}

std::optional<std::vector<double>> slice_word_features(
    const FrameSeries& frames, const WordToken& word, double fallback_window) {
  const auto& ts = frames.timestamps;
  const std::size_t dim = frames.num_features();
  const auto first = std::lower_bound(ts.begin(), ts.end(), word.start);
  const auto last = std::lower_bound(first, ts.end(), word.end);

  if (first != last) {
    const auto begin = static_cast<std::size_t>(first - ts.begin());
    const auto end = static_cast<std::size_t>(last - ts.begin());
    const double count = static_cast<double>(end - begin);
    std::vector<double> mean(dim, 0.0);
    for (std::size_t c = 0; c < dim; ++c) {
      double sum = 0.0;
      double lo = frames.values(begin, c);
      double hi = lo;
      for (std::size_t r = begin; r < end; ++r) {
        const double v = frames.values(r, c);
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      // Rounding in the sum must not push the mean outside the sample range.
      mean[c] = std::clamp(sum / count, lo, hi);
    }
    return mean;
  }

  if (ts.empty()) return std::nullopt;
  const double mid = 0.5 * (word.start + word.end);
  const auto after = std::lower_bound(ts.begin(), ts.end(), mid);
  std::size_t best = ts.size();
  double best_gap = 0.0;
  if (after != ts.begin()) {
    best = static_cast<std::size_t>(after - ts.begin()) - 1;
    best_gap = mid - ts[best];
  }
  if (after != ts.end()) {
    const auto idx = static_cast<std::size_t>(after - ts.begin());
    const double gap = ts[idx] - mid;
    if (best == ts.size() || gap < best_gap) {
      best = idx;
      best_gap = gap;
    }
  }
  if (best_gap > fallback_window) return std::nullopt;
  const auto row = frames.values.row(best);
  return std::vector<double>(row.begin(), row.end());
}

AlignmentResult align_corpus(std::span<const Segment> segments,
                             const std::map<std::string, FrameSeries>& frames,
                             Modality modality, double fallback_window) {
  AlignmentResult result;
  for (const Segment& segment : segments) {
    const auto it = frames.find(segment.id);
    if (it == frames.end())
      throw Error("segment '" + segment.id + "' has no " +
                  std::string(to_string(modality)) + " frames");
    const FrameSeries& series = it->second;
    if (series.modality != modality)
      throw Error("segment '" + segment.id + "': frame series modality is " +
                  std::string(to_string(series.modality)) + ", expected " +
                  std::string(to_string(modality)));
    for (std::size_t i = 0; i < segment.words.size(); ++i) {
      auto values = slice_word_features(series, segment.words[i], fallback_window);
      if (values) {
        result.vectors.push_back({segment.id, i, modality, std::move(*values)});
      } else {
        result.missing.push_back(
            {segment.id, i,
             series.num_frames() == 0 ? "no frames"
                                      : "no frame within fallback window"});
      }
    }
  }
  return result;
}

Matrix stack_word_vectors(std::span<const WordVector> vectors) {
  Matrix out;
  for (const WordVector& v : vectors) out.append_row(v.values);
  return out;
}

}  // namespace nvtext
