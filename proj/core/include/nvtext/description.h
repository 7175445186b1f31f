// core/include/nvtext/description.h

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

#ifndef NVTEXT_DESCRIPTION_H_
#define NVTEXT_DESCRIPTION_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nvtext/common.h"
#include "nvtext/model.h"

namespace nvtext {

inline constexpr double kDefaultAbsFloor = 1.0;
inline constexpr double kDefaultSigmaMultiplier = 1.0;
inline constexpr std::string_view kNeutralFace = "neutral face";
inline constexpr std::string_view kNormalVoice = "normal voice";

/// Ordered mapping from FACS action unit id to its descriptor phrase.
class AUCatalog {
 public:
  struct Entry {
    int id = 0;
    std::string descriptor;
  };

  AUCatalog() = default;
  /// Throws on duplicate ids or descriptors that are empty or not lowercase.
  explicit AUCatalog(std::vector<Entry> entries);

  /// The 13 action units shipped by default (AU2 ... AU45).
  static const AUCatalog& canonical();

  bool contains(int au) const;
  const std::string& descriptor(int au) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Reads a JSON object such as {"AU02": "outer brow raiser", ...}. Keys may
/// also be written "AU2", "AU02_r" or plain "2".
AUCatalog load_au_catalog(const std::filesystem::path& path);

/// "AU02_r" -> 2. Throws on anything that is not an AU column name.
int parse_au_id(std::string_view name);

/// AUs whose cluster mean reaches both `abs_floor` and the global mean,
/// ordered by cluster mean descending, then by AU id. `members` holds the
/// raw word vectors of one cluster, one column per entry of `au_ids`.
std::vector<int> dominant_aus(const Matrix& members,
                              std::span<const double> global_mean,
                              std::span<const int> au_ids, double abs_floor);

/// Catalog phrases for `aus`, or {"neutral face"} when there are none.
std::vector<std::string> describe_visual(std::span<const int> aus,
                                         const AUCatalog& catalog);

/// Sample mean and stddev per column, cutoffs mean -/+ multiplier * stddev.
IntensityThresholds fit_intensity_thresholds(const Matrix& values,
                                             std::span<const std::string> feature_names,
                                             double multiplier = kDefaultSigmaMultiplier);

enum class Intensity { kLow, kNormal, kHigh };

/// Strictly above `high` is high, strictly below `low` is low.
Intensity classify_intensity(double value, const FeatureThreshold& threshold);

/// One "<level> <feature>" phrase per feature, high phrases first, then low,
/// then normal; within a group by |value - mean| / stddev descending. Returns
/// {"normal voice"} when every feature is normal.
std::vector<std::string> label_acoustic_cluster(std::span<const double> centroid_raw,
                                                const IntensityThresholds& thresholds);

struct DescriptionOptions {
  double abs_floor = kDefaultAbsFloor;
  double sigma_multiplier = kDefaultSigmaMultiplier;
  const AUCatalog* catalog = nullptr;  // canonical catalog when null
};

/// Attaches a descriptor to every cluster of `model`. `raw` are the raw
/// word vectors the model was fitted on and `assignments` their cluster ids.
/// Visual models are described by dominant AUs, acoustic models by intensity
/// levels of the de-standardized centroid. Every cluster needs a member.
void build_codebook(ClusterModel& model, const Matrix& raw,
                    std::span<const std::size_t> assignments,
                    const DescriptionOptions& options = {});

}  // namespace nvtext

#endif  // NVTEXT_DESCRIPTION_H_
