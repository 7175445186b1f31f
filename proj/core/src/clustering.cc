// core/src/clustering.cc

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

#include "nvtext/clustering.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "nvtext/random.h"

namespace nvtext {

std::vector<double> Standardizer::apply(std::span<const double> raw) const {
  if (raw.size() != dim())
    throw Error("standardizer: expected dimension " + std::to_string(dim()) +
                ", got " + std::to_string(raw.size()));
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    out[i] = (raw[i] - mean[i]) / stddev[i];
  return out;
}

Matrix Standardizer::apply(const Matrix& raw) const {
  Matrix out(0, dim());
  for (std::size_t r = 0; r < raw.rows(); ++r) out.append_row(apply(raw.row(r)));
  return out;
}

std::vector<double> Standardizer::invert(std::span<const double> standardized) const {
  if (standardized.size() != dim())
    throw Error("standardizer: expected dimension " + std::to_string(dim()) +
                ", got " + std::to_string(standardized.size()));
  std::vector<double> out(standardized.size());
  for (std::size_t i = 0; i < standardized.size(); ++i)
    out[i] = standardized[i] * stddev[i] + mean[i];
  return out;
}

Standardizer fit_standardizer(const Matrix& vectors,
                              std::span<const std::string> feature_names) {
  if (vectors.rows() < 2)
    throw Error("standardizer: need at least 2 vectors, got " +
                std::to_string(vectors.rows()));
  if (feature_names.size() != vectors.cols())
    throw Error("standardizer: feature name count does not match columns");
  const std::size_t n = vectors.rows();
  const std::size_t d = vectors.cols();
  Standardizer s;
  s.mean.assign(d, 0.0);
  s.stddev.assign(d, 0.0);
  for (std::size_t c = 0; c < d; ++c) {
    double sum = 0.0;
    double lo = vectors(0, c);
    double hi = lo;
    for (std::size_t r = 0; r < n; ++r) {
      sum += vectors(r, c);
      lo = std::min(lo, vectors(r, c));
      hi = std::max(hi, vectors(r, c));
    }
    if (lo == hi)
      throw Error("standardizer: constant feature '" + feature_names[c] + "'");
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double dv = vectors(r, c) - mean;
      ss += dv * dv;
    }
    s.mean[c] = mean;
    s.stddev[c] = std::sqrt(ss / static_cast<double>(n));
  }
  return s;
}

std::size_t nearest_centroid(const Matrix& centroids, std::span<const double> point) {
  if (point.size() != centroids.cols())
    throw Error("nearest_centroid: expected dimension " +
                std::to_string(centroids.cols()) + ", got " +
                std::to_string(point.size()));
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.rows(); ++c) {
    const double d = squared_distance(point, centroids.row(c));
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

double kmeans_objective(const Matrix& points, const Matrix& centroids,
                        std::span<const std::size_t> assignments) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.rows(); ++i)
    total += squared_distance(points.row(i), centroids.row(assignments[i]));
  return total;
}

std::size_t count_distinct_rows(const Matrix& points) {
  std::vector<std::size_t> order(points.rows());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    const auto ra = points.row(a);
    const auto rb = points.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::sort(order.begin(), order.end(), less);
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (i == 0 || less(order[i - 1], order[i])) ++distinct;
  return distinct;
}

namespace {

std::vector<std::size_t> assign_all(const Matrix& points, const Matrix& centroids) {
  std::vector<std::size_t> out(points.rows());
  for (std::size_t i = 0; i < points.rows(); ++i)
    out[i] = nearest_centroid(centroids, points.row(i));
  return out;
}

Matrix kmeanspp_init(const Matrix& points, std::size_t k, Rng& rng) {
  const std::size_t n = points.rows();
  Matrix centroids(0, points.cols());
  centroids.append_row(points.row(rng.index(n)));
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i)
    d2[i] = squared_distance(points.row(i), centroids.row(0));

  while (centroids.rows() < k) {
    const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
    if (!(total > 0.0)) throw Error("kmeans: ran out of distinct points");
    const double target = rng.uniform() * total;
    std::size_t pick = n;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (d2[i] <= 0.0) continue;
      cumulative += d2[i];
      pick = i;
      if (cumulative > target) break;
    }
    centroids.append_row(points.row(pick));
    const auto added = centroids.row(centroids.rows() - 1);
    for (std::size_t i = 0; i < n; ++i)
      d2[i] = std::min(d2[i], squared_distance(points.row(i), added));
  }
  return centroids;
}

// Cluster means of `assignments`; empty clusters move to the point farthest
// from its own new centroid, each point used at most once.
Matrix update_centroids(const Matrix& points, std::span<const std::size_t> assignments,
                        std::size_t k) {
  const std::size_t d = points.cols();
  Matrix sums(k, d, 0.0);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    auto dst = sums.row(assignments[i]);
    const auto src = points.row(i);
    for (std::size_t c = 0; c < d; ++c) dst[c] += src[c];
    ++counts[assignments[i]];
  }
  std::vector<std::size_t> empty;
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] == 0) {
      empty.push_back(j);
      continue;
    }
    auto row = sums.row(j);
    for (double& v : row) v /= static_cast<double>(counts[j]);
  }
  if (empty.empty()) return sums;

  std::vector<double> dist(points.rows());
  for (std::size_t i = 0; i < points.rows(); ++i)
    dist[i] = squared_distance(points.row(i), sums.row(assignments[i]));
  std::vector<bool> used(points.rows(), false);
  for (std::size_t j : empty) {
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t i = 0; i < points.rows(); ++i) {
      if (!used[i] && dist[i] > far_d) {
        far_d = dist[i];
        far = i;
      }
    }
    used[far] = true;
    const auto src = points.row(far);
    std::copy(src.begin(), src.end(), sums.row(j).begin());
  }
  return sums;
}

bool has_empty_cluster(std::span<const std::size_t> assignments, std::size_t k) {
  std::vector<bool> seen(k, false);
  for (std::size_t a : assignments) seen[a] = true;
  return std::find(seen.begin(), seen.end(), false) != seen.end();
}

}  // namespace

KMeansResult kmeans_fit(const Matrix& points, std::size_t k, std::uint64_t seed,
                        const KMeansOptions& options) {
  if (k == 0) throw Error("kmeans: k must be >= 1");
  if (points.empty()) throw Error("kmeans: no points");
  const std::size_t distinct = count_distinct_rows(points);
  if (k > distinct)
    throw Error("kmeans: k=" + std::to_string(k) + " exceeds the " +
                std::to_string(distinct) + " distinct vectors");

  Rng rng(seed);
  KMeansResult result;
  result.centroids = kmeanspp_init(points, k, rng);
  result.assignments = assign_all(points, result.centroids);
  result.objective = kmeans_objective(points, result.centroids, result.assignments);
  result.objective_history.push_back(result.objective);

  for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
    Matrix centroids = update_centroids(points, result.assignments, k);
    std::vector<std::size_t> assignments = assign_all(points, centroids);
    const double objective = kmeans_objective(points, centroids, assignments);
    if (objective > result.objective) break;

    const double previous = result.objective;
    result.centroids = std::move(centroids);
    result.assignments = std::move(assignments);
    result.objective = objective;
    result.objective_history.push_back(objective);
    ++result.iterations;

    if (has_empty_cluster(result.assignments, k)) continue;
    if (previous - objective <= options.rel_tol * previous) break;
  }
  return result;
}

double silhouette_score(const Matrix& points, std::span<const std::size_t> assignments,
                        const SilhouetteOptions& options) {
  if (assignments.size() != points.rows())
    throw Error("silhouette: assignment count does not match point count");
  const std::size_t n = points.rows();

  std::vector<std::size_t> sample(n);
  std::iota(sample.begin(), sample.end(), 0);
  if (options.sample_cap > 0 && n > options.sample_cap) {
    Rng rng(options.seed);
    for (std::size_t i = 0; i < options.sample_cap; ++i)
      std::swap(sample[i], sample[i + rng.index(n - i)]);
    sample.resize(options.sample_cap);
    std::sort(sample.begin(), sample.end());
  }

  // Compact the labels present in the sample to 0..m-1.
  std::map<std::size_t, std::size_t> compact;
  for (std::size_t i : sample) compact.emplace(assignments[i], 0);
  if (compact.size() < 2) throw Error("silhouette undefined for k=1");
  std::size_t next = 0;
  for (auto& [label, id] : compact) id = next++;
  const std::size_t m = compact.size();
  std::vector<std::size_t> label(sample.size());
  std::vector<std::size_t> count(m, 0);
  for (std::size_t s = 0; s < sample.size(); ++s) {
    label[s] = compact[assignments[sample[s]]];
    ++count[label[s]];
  }

  std::vector<double> sums(m);
  double total = 0.0;
  for (std::size_t s = 0; s < sample.size(); ++s) {
    std::fill(sums.begin(), sums.end(), 0.0);
    const auto p = points.row(sample[s]);
    for (std::size_t t = 0; t < sample.size(); ++t) {
      if (t == s) continue;
      sums[label[t]] += std::sqrt(squared_distance(p, points.row(sample[t])));
    }
    const std::size_t own = label[s];
    if (count[own] == 1) continue;
    const double a = sums[own] / static_cast<double>(count[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < m; ++l)
      if (l != own) b = std::min(b, sums[l] / static_cast<double>(count[l]));
    const double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  return total / static_cast<double>(sample.size());
}

namespace {

ClusterModel model_from_fit(const KMeansResult& km, Modality modality,
                            std::vector<std::string> feature_names,
                            const Standardizer& standardizer, std::uint64_t seed,
                            const KMeansOptions& options) {
  ClusterModel model;
  model.modality = modality;
  model.feature_names = std::move(feature_names);
  model.k = km.centroids.rows();
  model.centroids = km.centroids;
  model.standardizer = standardizer;
  model.seed = seed;
  model.max_iter = options.max_iter;
  model.rel_tol = options.rel_tol;
  model.iterations = km.iterations;
  model.objective = km.objective;
  return model;
}

}  // namespace

ClusterFit fit_cluster_model(const Matrix& raw, Modality modality,
                             std::vector<std::string> feature_names, std::size_t k,
                             std::uint64_t seed, const KMeansOptions& options,
                             std::size_t silhouette_cap) {
  const Standardizer standardizer = fit_standardizer(raw, feature_names);
  const Matrix z = standardizer.apply(raw);
  KMeansResult km = kmeans_fit(z, k, seed, options);
  ClusterFit fit;
  fit.model = model_from_fit(km, modality, std::move(feature_names), standardizer,
                             seed, options);
  if (k >= 2) {
    const double s = silhouette_score(z, km.assignments, {silhouette_cap, seed});
    fit.model.silhouette = s;
    fit.model.candidates.push_back({k, s, km.objective});
  }
  fit.assignments = std::move(km.assignments);
  return fit;
}

ClusterFit select_k(const Matrix& raw, Modality modality,
                    std::vector<std::string> feature_names,
                    const SelectKOptions& options) {
  if (options.k_min < 2 || options.k_min > options.k_max)
    throw Error("select_k: need 2 <= k_min <= k_max, got [" +
                std::to_string(options.k_min) + ", " +
                std::to_string(options.k_max) + "]");
  const Standardizer standardizer = fit_standardizer(raw, feature_names);
  const Matrix z = standardizer.apply(raw);
  const std::size_t distinct = count_distinct_rows(z);
  if (options.k_max > distinct)
    throw Error("select_k: k_max=" + std::to_string(options.k_max) +
                " exceeds the " + std::to_string(distinct) + " distinct vectors");

  std::vector<KCandidate> candidates;
  KMeansResult best;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t k = options.k_min; k <= options.k_max; ++k) {
    KMeansResult km = kmeans_fit(z, k, options.seed, options.kmeans);
    const double s =
        silhouette_score(z, km.assignments, {options.silhouette_cap, options.seed});
    candidates.push_back({k, s, km.objective});
    if (s > best_score) {
      best_score = s;
      best = std::move(km);
    }
  }

  ClusterFit fit;
  fit.model = model_from_fit(best, modality, std::move(feature_names), standardizer,
                             options.seed, options.kmeans);
  fit.model.silhouette = best_score;
  fit.model.candidates = std::move(candidates);
  fit.assignments = std::move(best.assignments);
  return fit;
}

std::size_t assign_cluster(const ClusterModel& model, std::span<const double> raw) {
  if (raw.size() != model.feature_names.size())
    throw Error("assign_cluster: expected dimension " +
                std::to_string(model.feature_names.size()) + ", got " +
                std::to_string(raw.size()));
  return nearest_centroid(model.centroids, model.standardizer.apply(raw));
}

double adjusted_rand_index(std::span<const std::size_t> a,
                           std::span<const std::size_t> b) {
  if (a.size() != b.size())
    throw Error("adjusted_rand_index: labelings differ in length");
  const double n = static_cast<double>(a.size());
  if (a.size() < 2) return 1.0;
  std::map<std::pair<std::size_t, std::size_t>, double> joint;
  std::map<std::size_t, double> rows, cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1.0;
    rows[a[i]] += 1.0;
    cols[b[i]] += 1.0;
  }
  auto pairs = [](double x) { return x * (x - 1.0) / 2.0; };
  double index = 0.0, sum_rows = 0.0, sum_cols = 0.0;
  for (const auto& [key, c] : joint) index += pairs(c);
  for (const auto& [key, c] : rows) sum_rows += pairs(c);
  for (const auto& [key, c] : cols) sum_cols += pairs(c);
  const double expected = sum_rows * sum_cols / pairs(n);
  const double max_index = 0.5 * (sum_rows + sum_cols);
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

}  // namespace nvtext
