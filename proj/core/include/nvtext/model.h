// core/include/nvtext/model.h

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

#ifndef NVTEXT_MODEL_H_
#define NVTEXT_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nvtext/common.h"

namespace nvtext {

/// Per-feature z-score transform fitted on a training set.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> stddev;

  std::size_t dim() const { return mean.size(); }
  std::vector<double> apply(std::span<const double> raw) const;
  Matrix apply(const Matrix& raw) const;
  std::vector<double> invert(std::span<const double> standardized) const;

  bool operator==(const Standardizer&) const = default;
};

/// Low/high cutoffs of one acoustic feature, mean -/+ multiplier * stddev.
struct FeatureThreshold {
  std::string feature;
  double mean = 0.0;
  double stddev = 0.0;
  double low = 0.0;
  double high = 0.0;

  bool operator==(const FeatureThreshold&) const = default;
};

struct IntensityThresholds {
  double multiplier = 1.0;
  std::vector<FeatureThreshold> features;

  bool operator==(const IntensityThresholds&) const = default;
};

/// Text attached to one cluster. For visual clusters `action_units` lists
/// the dominant AU ids in descriptor order.
struct ClusterDescriptor {
  std::size_t cluster = 0;
  std::vector<std::string> phrases;
  std::vector<int> action_units;

  bool operator==(const ClusterDescriptor&) const = default;
};

/// Silhouette and objective of one candidate K tried during selection.
struct KCandidate {
  std::size_t k = 0;
  double silhouette = 0.0;
  double objective = 0.0;

  bool operator==(const KCandidate&) const = default;
};

/// A fitted codebook for one modality. Centroids live in standardized space.
struct ClusterModel {
  Modality modality = Modality::kVisual;
  std::vector<std::string> feature_names;
  std::size_t k = 0;
  Matrix centroids;
  Standardizer standardizer;
  std::uint64_t seed = 0;
  std::size_t max_iter = 0;
  double rel_tol = 0.0;
  std::size_t iterations = 0;
  double objective = 0.0;
  /// Unset for k = 1, where the silhouette is undefined.
  std::optional<double> silhouette;
  std::vector<KCandidate> candidates;

  std::vector<ClusterDescriptor> descriptors;
  /// Description settings; abs_floor applies to visual, thresholds to acoustic.
  std::optional<double> abs_floor;
  std::optional<IntensityThresholds> thresholds;

  bool has_descriptors() const { return descriptors.size() == k && k > 0; }

  bool operator==(const ClusterModel&) const = default;
};

}  // namespace nvtext

#endif  // NVTEXT_MODEL_H_
