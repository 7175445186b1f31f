// tests/oracles.h

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

// Slow definition-direct reference implementations shared by the unit and
// acceptance tests. None of these call into the library under test.

#ifndef NVTEXT_TESTS_ORACLES_H_
#define NVTEXT_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "nvtext/common.h"

namespace nvtext::oracle {

inline double euclidean(const Matrix& m, std::size_t i, std::size_t j) {
  double acc = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const double d = m(i, c) - m(j, c);
    acc += d * d;
  }
  return std::sqrt(acc);
}

// Mean over points of (b - a) / max(a, b); singleton clusters score 0.
inline double silhouette(const Matrix& x, std::span<const std::size_t> labels) {
  const std::size_t n = x.rows();
  std::set<std::size_t> clusters(labels.begin(), labels.end());
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double own_sum = 0.0;
    std::size_t own_n = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && labels[j] == labels[i]) {
        own_sum += euclidean(x, i, j);
        ++own_n;
      }
    }
    if (own_n == 0) continue;
    const double a = own_sum / static_cast<double>(own_n);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c : clusters) {
      if (c == labels[i]) continue;
      double sum = 0.0;
      std::size_t cnt = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (labels[j] == c) {
          sum += euclidean(x, i, j);
          ++cnt;
        }
      }
      b = std::min(b, sum / static_cast<double>(cnt));
    }
    const double m = std::max(a, b);
    total += m > 0.0 ? (b - a) / m : 0.0;
  }
  return total / static_cast<double>(n);
}

// Exhaustive search over all 2-partitions of a small 1-D point set.
struct TwoPartition {
  double low_mean = 0.0;
  double high_mean = 0.0;
  double objective = std::numeric_limits<double>::infinity();
};

inline TwoPartition best_two_partition(std::span<const double> xs) {
  TwoPartition best;
  const std::size_t n = xs.size();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    double s[2] = {0, 0};
    std::size_t c[2] = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      const int side = (mask >> i) & 1u;
      s[side] += xs[i];
      ++c[side];
    }
    const double m[2] = {s[0] / static_cast<double>(c[0]), s[1] / static_cast<double>(c[1])};
    double obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = xs[i] - m[(mask >> i) & 1u];
      obj += d * d;
    }
    if (obj < best.objective) {
      best.objective = obj;
      best.low_mean = std::min(m[0], m[1]);
      best.high_mean = std::max(m[0], m[1]);
    }
  }
  return best;
}

// Pair-counting form of the adjusted Rand index.
inline double adjusted_rand(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  double ss = 0, sd = 0, ds = 0, dd = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool sa = a[i] == a[j];
      const bool sb = b[i] == b[j];
      if (sa && sb) ++ss;
      else if (sa) ++sd;
      else if (sb) ++ds;
      else ++dd;
    }
  }
  const double denom = (ss + sd) * (sd + dd) + (ss + ds) * (ds + dd);
  if (denom == 0.0) return 1.0;
  return 2.0 * (ss * dd - sd * ds) / denom;
}

// Welford one-pass mean and variance.
struct Moments {
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t n = 0;
  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  double population_std() const { return std::sqrt(m2 / static_cast<double>(n)); }
  double sample_std() const { return std::sqrt(m2 / static_cast<double>(n - 1)); }
};

}  // namespace nvtext::oracle

#endif  // NVTEXT_TESTS_ORACLES_H_
