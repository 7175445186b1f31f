// core/include/nvtext/corpus_io.h

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

#ifndef NVTEXT_CORPUS_IO_H_
#define NVTEXT_CORPUS_IO_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nvtext/alignment.h"
#include "nvtext/common.h"
#include "nvtext/model.h"
#include "nvtext/textgen.h"

namespace nvtext {

/// Column names required in a feature CSV, timestamp first.
const std::vector<std::string>& expected_csv_columns(Modality modality);

/// Reads a feature table. The header must match expected_csv_columns exactly
/// (surrounding whitespace in cells is ignored). Rows holding NaN or inf are
/// dropped and counted in FrameSeries::dropped_rows.
FrameSeries read_frames_csv(const std::filesystem::path& path, Modality modality);
void write_frames_csv(const std::filesystem::path& path, const FrameSeries& frames);

/// One JSON object per line:
///   {"segment_id": ..., "text": ..., "label": 2.4 | true,
///    "words": [{"w": ..., "start": ..., "end": ...}, ...]}
/// Numeric labels are sentiment scores, booleans are binary labels.
std::vector<Segment> read_alignments(const std::filesystem::path& path);
void write_alignments(const std::filesystem::path& path, std::span<const Segment> segments);

struct ManifestEntry {
  std::string id;
  Split split = Split::kTrain;
  std::optional<std::filesystem::path> visual;
  std::optional<std::filesystem::path> acoustic;
};

struct DatasetManifest {
  std::string dataset;
  std::filesystem::path alignments;
  std::vector<ManifestEntry> entries;
};

/// Reads a manifest; relative paths resolve against the manifest directory
/// and every referenced file must exist.
DatasetManifest read_manifest(const std::filesystem::path& path);
/// Writes paths relative to the manifest directory where possible.
void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);

/// Manifest joined with its alignment records, in manifest order.
struct Dataset {
  DatasetManifest manifest;
  std::vector<Segment> segments;
  std::vector<Split> splits;  // parallel to segments

  std::vector<Segment> segments_in(Split split) const;
};

Dataset load_dataset(const std::filesystem::path& manifest_path);

struct LoadedFrames {
  std::map<std::string, FrameSeries> frames;
  std::size_t dropped_rows = 0;
};

/// Reads the feature CSVs of `modality` for the given segments. Segments
/// without a file for the modality are left out of the map.
LoadedFrames load_frames(const Dataset& dataset, Modality modality,
                         std::span<const Segment> segments);

/// A deserialized codebook file.
struct ModelArtifact {
  ClusterModel model;
  std::string tool_version;
  std::string content_hash;
};

/// Canonical serialization: equal models produce byte-equal files.
std::string serialize_model(const ClusterModel& model);
ModelArtifact parse_model(const std::string& contents);
void write_model(const std::filesystem::path& path, const ClusterModel& model);
/// Throws CorruptionError on malformed content or a hash mismatch.
ModelArtifact read_model(const std::filesystem::path& path);

/// Writes one line per record, sorted by segment id, with an extended text
/// for each of `modes`. Throws on duplicate ids or a missing mode.
void write_corpus(const std::filesystem::path& path, std::span<const CorpusRecord> records,
                  std::span<const AblationMode> modes);
std::vector<CorpusRecord> read_corpus(const std::filesystem::path& path);

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

}  // namespace nvtext

#endif  // NVTEXT_CORPUS_IO_H_
