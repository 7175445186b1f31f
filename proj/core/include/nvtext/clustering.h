// core/include/nvtext/clustering.h

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

#ifndef NVTEXT_CLUSTERING_H_
#define NVTEXT_CLUSTERING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nvtext/common.h"
#include "nvtext/model.h"

namespace nvtext {

inline constexpr std::size_t kDefaultMaxIter = 300;
inline constexpr double kDefaultRelTol = 1e-6;
inline constexpr std::size_t kDefaultSilhouetteCap = 10000;
inline constexpr std::size_t kDefaultKMin = 2;
inline constexpr std::size_t kDefaultKMax = 12;

/// Population mean/stddev per column. Needs at least two rows and rejects a
/// constant column, naming it via `feature_names`.
Standardizer fit_standardizer(const Matrix& vectors,
                              std::span<const std::string> feature_names);

struct KMeansOptions {
  std::size_t max_iter = kDefaultMaxIter;
  double rel_tol = kDefaultRelTol;
};

struct KMeansResult {
  Matrix centroids;
  /// Nearest-centroid index of each point under the final centroids.
  std::vector<std::size_t> assignments;
  /// Within-cluster sum of squared distances of the final state.
  double objective = 0.0;
  /// Objective after initialization and after every accepted Lloyd step.
  std::vector<double> objective_history;
  std::size_t iterations = 0;
};

/// Lloyd's algorithm from a seeded k-means++ start.
///
/// Iteration stops at max_iter, when the relative objective decrease drops
/// below rel_tol, or when a step would not decrease the objective (that step
/// is discarded, so the history is non-increasing). An empty cluster is
/// reseeded at the point farthest from its own centroid. Requires
/// 1 <= k <= number of distinct rows.
KMeansResult kmeans_fit(const Matrix& points, std::size_t k, std::uint64_t seed,
                        const KMeansOptions& options = {});

/// Index of the nearest centroid; ties go to the lowest index.
std::size_t nearest_centroid(const Matrix& centroids, std::span<const double> point);

/// Sum over points of the squared distance to their assigned centroid.
double kmeans_objective(const Matrix& points, const Matrix& centroids,
                        std::span<const std::size_t> assignments);

std::size_t count_distinct_rows(const Matrix& points);

struct SilhouetteOptions {
  /// Larger inputs are scored on a seeded uniform subsample of this size.
  std::size_t sample_cap = kDefaultSilhouetteCap;
  std::uint64_t seed = 0;
};

/// Mean silhouette (b - a) / max(a, b) under Euclidean distance. Points in a
/// singleton cluster score 0. Throws if fewer than two clusters are present.
double silhouette_score(const Matrix& points,
                        std::span<const std::size_t> assignments,
                        const SilhouetteOptions& options = {});

struct SelectKOptions {
  std::size_t k_min = kDefaultKMin;
  std::size_t k_max = kDefaultKMax;
  std::uint64_t seed = 0;
  KMeansOptions kmeans;
  std::size_t silhouette_cap = kDefaultSilhouetteCap;
};

/// A fitted model together with the assignment of every fitting vector.
struct ClusterFit {
  ClusterModel model;
  std::vector<std::size_t> assignments;
};

/// Standardizes `raw` and fits K-means with a fixed k. The model carries
/// no descriptors yet.
ClusterFit fit_cluster_model(const Matrix& raw, Modality modality,
                             std::vector<std::string> feature_names,
                             std::size_t k, std::uint64_t seed,
                             const KMeansOptions& options = {},
                             std::size_t silhouette_cap = kDefaultSilhouetteCap);

/// Fits every k in [k_min, k_max] with the same seed and keeps the highest
/// silhouette. Ties keep the smaller k.
ClusterFit select_k(const Matrix& raw, Modality modality,
                    std::vector<std::string> feature_names,
                    const SelectKOptions& options);

/// Cluster id of a raw-space vector.
std::size_t assign_cluster(const ClusterModel& model, std::span<const double> raw);

/// Adjusted Rand index between two labelings of the same points.
double adjusted_rand_index(std::span<const std::size_t> a,
                           std::span<const std::size_t> b);

}  // namespace nvtext

#endif  // NVTEXT_CLUSTERING_H_
