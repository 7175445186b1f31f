// core/src/description.cc

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

#include "nvtext/description.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>

#include "json.hpp"

namespace nvtext {

AUCatalog::AUCatalog(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::set<int> seen;
  for (const Entry& e : entries_) {
    if (!seen.insert(e.id).second)
      throw Error("AU catalog: duplicate id AU" + std::to_string(e.id));
    if (e.descriptor.empty())
      throw Error("AU catalog: empty descriptor for AU" + std::to_string(e.id));
    for (unsigned char c : e.descriptor)
      if (std::isupper(c))
        throw Error("AU catalog: descriptor '" + e.descriptor +
                    "' must be lowercase");
  }
}

const AUCatalog& AUCatalog::canonical() {
  static const AUCatalog catalog({
      {2, "outer brow raiser"},
      {4, "brow lowerer"},
      {5, "upper lid raiser"},
      {6, "cheek raiser"},
      {7, "lid tightener"},
      {9, "nose wrinkler"},
      {12, "lip corner puller"},
      {15, "lip corner depressor"},
      {20, "lip stretcher"},
      {23, "lip tightener"},
      {25, "lips part"},
      {26, "jaw drop"},
      {45, "blink"},
  });
  return catalog;
}

bool AUCatalog::contains(int au) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [au](const Entry& e) { return e.id == au; });
}

const std::string& AUCatalog::descriptor(int au) const {
  for (const Entry& e : entries_)
    if (e.id == au) return e.descriptor;
  throw Error("AU catalog has no entry for AU" + std::to_string(au));
}

int parse_au_id(std::string_view name) {
  std::string_view rest = name;
  if (rest.size() >= 2 && (rest[0] == 'A' || rest[0] == 'a') &&
      (rest[1] == 'U' || rest[1] == 'u'))
    rest.remove_prefix(2);
  if (rest.ends_with("_r")) rest.remove_suffix(2);
  int id = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), id);
  if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || id < 0)
    throw Error("not an action unit name: '" + std::string(name) + "'");
  return id;
}

AUCatalog load_au_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open AU catalog " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("AU catalog " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw Error("AU catalog " + path.string() + ": expected an object");
  std::vector<AUCatalog::Entry> entries;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string())
      throw Error("AU catalog " + path.string() + ": value of '" + key +
                  "' is not a string");
    entries.push_back({parse_au_id(key), value.get<std::string>()});
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return AUCatalog(std::move(entries));
}

std::vector<int> dominant_aus(const Matrix& members, std::span<const double> global_mean,
                              std::span<const int> au_ids, double abs_floor) {
  if (members.empty()) throw Error("dominant_aus: cluster has no members");
  if (members.cols() != au_ids.size() || global_mean.size() != au_ids.size())
    throw Error("dominant_aus: dimension mismatch");
  struct Candidate {
    int au;
    double mean;
  };
  std::vector<Candidate> picked;
  for (std::size_t c = 0; c < au_ids.size(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < members.rows(); ++r) sum += members(r, c);
    const double mean = sum / static_cast<double>(members.rows());
    if (mean >= abs_floor && mean >= global_mean[c]) picked.push_back({au_ids[c], mean});
  }
  std::sort(picked.begin(), picked.end(), [](const Candidate& a, const Candidate& b) {
    if (a.mean != b.mean) return a.mean > b.mean;
    return a.au < b.au;
  });
  std::vector<int> out;
  out.reserve(picked.size());
  for (const Candidate& c : picked) out.push_back(c.au);
  return out;
}

std::vector<std::string> describe_visual(std::span<const int> aus,
                                         const AUCatalog& catalog) {
  if (aus.empty()) return {std::string(kNeutralFace)};
  std::vector<std::string> out;
  out.reserve(aus.size());
  for (int au : aus) out.push_back(catalog.descriptor(au));
  return out;
}

IntensityThresholds fit_intensity_thresholds(const Matrix& values,
                                             std::span<const std::string> feature_names,
                                             double multiplier) {
  if (!(multiplier >= 0.0) || !std::isfinite(multiplier))
    throw Error("intensity thresholds: multiplier must be finite and >= 0");
  if (values.rows() < 2) throw Error("intensity thresholds: need at least 2 values");
  if (feature_names.size() != values.cols())
    throw Error("intensity thresholds: feature name count does not match columns");
  IntensityThresholds out;
  out.multiplier = multiplier;
  const double n = static_cast<double>(values.rows());
  for (std::size_t c = 0; c < values.cols(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < values.rows(); ++r) sum += values(r, c);
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t r = 0; r < values.rows(); ++r) {
      const double d = values(r, c) - mean;
      ss += d * d;
    }
    const double stddev = std::sqrt(ss / (n - 1.0));
    if (!(stddev > 0.0))
      throw Error("intensity thresholds: constant feature '" + feature_names[c] + "'");
    out.features.push_back({feature_names[c], mean, stddev, mean - multiplier * stddev,
                            mean + multiplier * stddev});
  }
  return out;
}

Intensity classify_intensity(double value, const FeatureThreshold& threshold) {
  if (value > threshold.high) return Intensity::kHigh;
  if (value < threshold.low) return Intensity::kLow;
  return Intensity::kNormal;
}

std::vector<std::string> label_acoustic_cluster(std::span<const double> centroid_raw,
                                                const IntensityThresholds& thresholds) {
  const auto& features = thresholds.features;
  if (centroid_raw.size() != features.size())
    throw Error("label_acoustic_cluster: centroid has " +
                std::to_string(centroid_raw.size()) + " features, thresholds have " +
                std::to_string(features.size()));
  struct Item {
    std::size_t feature;
    Intensity level;
    double deviation;
  };
  std::vector<Item> items;
  for (std::size_t f = 0; f < features.size(); ++f) {
    const FeatureThreshold& t = features[f];
    items.push_back({f, classify_intensity(centroid_raw[f], t),
                     std::abs(centroid_raw[f] - t.mean) / t.stddev});
  }
  if (std::all_of(items.begin(), items.end(),
                  [](const Item& i) { return i.level == Intensity::kNormal; }))
    return {std::string(kNormalVoice)};

  auto group = [](Intensity level) {
    switch (level) {
      case Intensity::kHigh: return 0;
      case Intensity::kLow: return 1;
      case Intensity::kNormal: return 2;
    }
    return 2;
  };
  std::stable_sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (group(a.level) != group(b.level)) return group(a.level) < group(b.level);
    return a.deviation > b.deviation;
  });
  std::vector<std::string> out;
  for (const Item& i : items) {
    const char* level = i.level == Intensity::kHigh  ? "high "
                        : i.level == Intensity::kLow ? "low "
                                                     : "normal ";
    out.push_back(level + features[i.feature].feature);
  }
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> members_by_cluster(
    std::size_t k, std::span<const std::size_t> assignments) {
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] >= k)
      throw Error("codebook: assignment " + std::to_string(assignments[i]) +
                  " out of range for k=" + std::to_string(k));
    members[assignments[i]].push_back(i);
  }
  for (std::size_t j = 0; j < k; ++j)
    if (members[j].empty())
      throw Error("codebook: cluster " + std::to_string(j) + " has no members");
  return members;
}

}  // namespace

void build_codebook(ClusterModel& model, const Matrix& raw,
                    std::span<const std::size_t> assignments,
                    const DescriptionOptions& options) {
  if (raw.rows() != assignments.size())
    throw Error("codebook: vector count does not match assignment count");
  if (raw.cols() != model.feature_names.size())
    throw Error("codebook: vector dimension does not match the model");
  const auto members = members_by_cluster(model.k, assignments);
  model.descriptors.clear();

  if (model.modality == Modality::kVisual) {
    const AUCatalog& catalog = options.catalog ? *options.catalog : AUCatalog::canonical();
    std::vector<int> au_ids;
    for (const std::string& name : model.feature_names) {
      const int id = parse_au_id(name);
      if (!catalog.contains(id))
        throw Error("AU catalog has no entry for feature '" + name + "'");
      au_ids.push_back(id);
    }
    std::vector<double> global_mean(raw.cols(), 0.0);
    for (std::size_t r = 0; r < raw.rows(); ++r)
      for (std::size_t c = 0; c < raw.cols(); ++c) global_mean[c] += raw(r, c);
    for (double& m : global_mean) m /= static_cast<double>(raw.rows());

    for (std::size_t j = 0; j < model.k; ++j) {
      Matrix cluster(0, raw.cols());
      for (std::size_t i : members[j]) cluster.append_row(raw.row(i));
      auto aus = dominant_aus(cluster, global_mean, au_ids, options.abs_floor);
      auto phrases = describe_visual(aus, catalog);
      model.descriptors.push_back({j, std::move(phrases), std::move(aus)});
    }
    model.abs_floor = options.abs_floor;
    model.thresholds.reset();
  } else {
    IntensityThresholds thresholds =
        fit_intensity_thresholds(raw, model.feature_names, options.sigma_multiplier);
    for (std::size_t j = 0; j < model.k; ++j) {
      const auto centroid = model.standardizer.invert(model.centroids.row(j));
      model.descriptors.push_back({j, label_acoustic_cluster(centroid, thresholds), {}});
    }
    model.thresholds = std::move(thresholds);
    model.abs_floor.reset();
  }
}

}  // namespace nvtext
