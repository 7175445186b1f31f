// core/src/corpus_io.cc

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

#include "nvtext/corpus_io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nvtext/version.h"

namespace nvtext {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kModelFormat = "nvtext-codebook";
constexpr int kModelFormatVersion = 1;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(std::span<const std::string> items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "nan" || lower == "-nan" || lower == "+nan")
    return std::numeric_limits<double>::quiet_NaN();
  if (lower == "inf" || lower == "+inf" || lower == "infinity")
    return std::numeric_limits<double>::infinity();
  if (lower == "-inf" || lower == "-infinity") return -std::numeric_limits<double>::infinity();
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::ifstream open_in(const fs::path& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + std::string(what) + " " + path.string());
  return in;
}

std::ofstream open_out(const fs::path& path, std::string_view what) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + std::string(what) + " " + path.string());
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

json label_to_json(const Label& label) {
  if (label.kind == LabelKind::kBinary) return json(label.value != 0.0);
  return json(label.value);
}

Label label_from_json(const json& j) {
  if (j.is_boolean()) return Label::binary(j.get<bool>());
  if (j.is_number()) return Label::sentiment(j.get<double>());
  throw Error("label must be a number (sentiment) or a boolean (binary)");
}

template <typename T>
T require(const json& obj, const char* key) {
  if (!obj.contains(key)) throw Error(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

const std::vector<std::string>& expected_csv_columns(Modality modality) {
  static const std::vector<std::string> visual = {
      "timestamp", "AU02_r", "AU04_r", "AU05_r", "AU06_r", "AU07_r",
      "AU09_r",    "AU12_r", "AU15_r", "AU23_r", "AU26_r", "AU45_r"};
  static const std::vector<std::string> acoustic = {"timestamp", "pitch", "loudness",
                                                    "jitter", "shimmer"};
  return modality == Modality::kVisual ? visual : acoustic;
}

FrameSeries read_frames_csv(const fs::path& path, Modality modality) {
  std::ifstream in = open_in(path, "feature file");
  const auto& expected = expected_csv_columns(modality);
  std::string line;
  if (!std::getline(in, line)) throw Error(path.string() + ": empty feature file");
  strip_cr(line);
  std::vector<std::string> found;
  for (auto cell : split_csv(line)) found.emplace_back(cell);
  if (found != expected)
    throw Error(path.string() + ": bad " + std::string(to_string(modality)) +
                " header\n  expected: " + join(expected, ",") + "\n  found:    " +
                join(found, ","));

  const std::size_t dim = expected.size() - 1;
  std::vector<double> timestamps;
  Matrix values(0, dim);
  std::vector<double> row(dim);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != expected.size())
      throw Error(path.string() + ":" + std::to_string(line_no) + ": expected " +
                  std::to_string(expected.size()) + " fields, got " +
                  std::to_string(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto v = parse_number(cells[c]);
      if (!v)
        throw Error(path.string() + ":" + std::to_string(line_no) + ": cannot parse '" +
                    std::string(cells[c]) + "' in column " + expected[c]);
      if (c == 0)
        timestamps.push_back(*v);
      else
        row[c - 1] = *v;
    }
    values.append_row(row);
  }
  std::vector<std::string> names(expected.begin() + 1, expected.end());
  try {
    return make_frame_series(modality, std::move(names), timestamps, values);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_frames_csv(const fs::path& path, const FrameSeries& frames) {
  std::ofstream out = open_out(path, "feature file");
  out << "timestamp";
  for (const auto& name : frames.feature_names) out << ',' << name;
  out << '\n';
  for (std::size_t r = 0; r < frames.num_frames(); ++r) {
    out << format_number(frames.timestamps[r]);
    for (double v : frames.values.row(r)) out << ',' << format_number(v);
    out << '\n';
  }
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<Segment> read_alignments(const fs::path& path) {
  std::ifstream in = open_in(path, "alignment file");
  std::vector<Segment> segments;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (trim(line).empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
    try {
      const json rec = json::parse(line);
      if (!rec.is_object()) throw Error("record is not an object");
      Segment s;
      s.id = require<std::string>(rec, "segment_id");
      s.text = require<std::string>(rec, "text");
      if (!rec.contains("label")) throw Error("missing field 'label'");
      s.label = label_from_json(rec.at("label"));
      if (!rec.contains("words") || !rec.at("words").is_array())
        throw Error("field 'words' must be an array");
      for (const json& w : rec.at("words")) {
        if (!w.is_object()) throw Error("word entry is not an object");
        s.words.push_back({require<std::string>(w, "w"), require<double>(w, "start"),
                           require<double>(w, "end")});
      }
      validate_segment(s);
      if (!ids.insert(s.id).second) throw Error("duplicate segment id '" + s.id + "'");
      segments.push_back(std::move(s));
    } catch (const json::exception& e) {
      throw Error(where + "malformed record: " + e.what());
    } catch (const Error& e) {
      throw Error(where + e.what());
    }
  }
  return segments;
}

void write_alignments(const fs::path& path, std::span<const Segment> segments) {
  std::ofstream out = open_out(path, "alignment file");
  for (const Segment& s : segments) {
    json words = json::array();
    for (const WordToken& w : s.words)
      words.push_back({{"w", w.text}, {"start", w.start}, {"end", w.end}});
    json rec = {{"segment_id", s.id},
                {"text", s.text},
                {"label", label_to_json(s.label)},
                {"words", std::move(words)}};
    out << rec.dump() << '\n';
  }
  if (!out) throw Error("failed writing " + path.string());
}

DatasetManifest read_manifest(const fs::path& path) {
  std::ifstream in = open_in(path, "manifest");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(path.string() + ": malformed manifest: " + e.what());
  }
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    fs::path full = fs::path(p).is_absolute() ? fs::path(p) : base / p;
    if (!fs::exists(full))
      throw Error(path.string() + ": referenced file does not exist: " + full.string());
    return full.lexically_normal();
  };
  try {
    if (!doc.is_object()) throw Error("manifest is not an object");
    DatasetManifest m;
    m.dataset = require<std::string>(doc, "dataset");
    m.alignments = resolve(require<std::string>(doc, "alignments"));
    if (!doc.contains("segments") || !doc.at("segments").is_array())
      throw Error("field 'segments' must be an array");
    std::set<std::string> ids;
    for (const json& e : doc.at("segments")) {
      ManifestEntry entry;
      entry.id = require<std::string>(e, "id");
      entry.split = parse_split(require<std::string>(e, "split"));
      if (e.contains("visual") && !e.at("visual").is_null())
        entry.visual = resolve(require<std::string>(e, "visual"));
      if (e.contains("acoustic") && !e.at("acoustic").is_null())
        entry.acoustic = resolve(require<std::string>(e, "acoustic"));
      if (!ids.insert(entry.id).second)
        throw Error("duplicate segment id '" + entry.id + "'");
      m.entries.push_back(std::move(entry));
    }
    return m;
  } catch (const Error& e) {
    if (std::string_view(e.what()).starts_with(path.string())) throw;
    throw Error(path.string() + ": " + e.what());
  }
}

void write_manifest(const fs::path& path, const DatasetManifest& manifest) {
  const fs::path base = fs::absolute(path).parent_path().lexically_normal();
  auto rel = [&](const fs::path& p) {
    const fs::path r = fs::absolute(p).lexically_normal().lexically_relative(base);
    return r.empty() ? p.generic_string() : r.generic_string();
  };
  json segments = json::array();
  for (const ManifestEntry& e : manifest.entries) {
    json entry = {{"id", e.id}, {"split", std::string(to_string(e.split))}};
    entry["visual"] = e.visual ? json(rel(*e.visual)) : json(nullptr);
    entry["acoustic"] = e.acoustic ? json(rel(*e.acoustic)) : json(nullptr);
    segments.push_back(std::move(entry));
  }
  json doc = {{"dataset", manifest.dataset},
              {"alignments", rel(manifest.alignments)},
              {"segments", std::move(segments)}};
  std::ofstream out = open_out(path, "manifest");
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<Segment> Dataset::segments_in(Split split) const {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < segments.size(); ++i)
    if (splits[i] == split) out.push_back(segments[i]);
  return out;
}

Dataset load_dataset(const fs::path& manifest_path) {
  Dataset d;
  d.manifest = read_manifest(manifest_path);
  std::vector<Segment> records = read_alignments(d.manifest.alignments);
  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < records.size(); ++i) by_id[records[i].id] = i;
  std::set<std::string> listed;
  for (const ManifestEntry& e : d.manifest.entries) {
    const auto it = by_id.find(e.id);
    if (it == by_id.end())
      throw Error(manifest_path.string() + ": segment '" + e.id +
                  "' has no alignment record");
    d.segments.push_back(records[it->second]);
    d.splits.push_back(e.split);
    listed.insert(e.id);
  }
  for (const Segment& s : records)
    if (!listed.count(s.id))
      throw Error(d.manifest.alignments.string() + ": segment '" + s.id +
                  "' is not listed in the manifest");
  return d;
}

LoadedFrames load_frames(const Dataset& dataset, Modality modality,
                         std::span<const Segment> segments) {
  std::map<std::string, const ManifestEntry*> entries;
  for (const ManifestEntry& e : dataset.manifest.entries) entries[e.id] = &e;
  LoadedFrames out;
  for (const Segment& s : segments) {
    const auto it = entries.find(s.id);
    if (it == entries.end())
      throw Error("segment '" + s.id + "' is not in the manifest");
    const auto& file = modality == Modality::kVisual ? it->second->visual
                                                     : it->second->acoustic;
    if (!file) continue;
    FrameSeries fsr = read_frames_csv(*file, modality);
    out.dropped_rows += fsr.dropped_rows;
    out.frames.emplace(s.id, std::move(fsr));
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

namespace {

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json model_payload(const ClusterModel& m) {
  json centroids = json::array();
  for (std::size_t r = 0; r < m.centroids.rows(); ++r) {
    const auto row = m.centroids.row(r);
    centroids.push_back(std::vector<double>(row.begin(), row.end()));
  }
  json candidates = json::array();
  for (const KCandidate& c : m.candidates)
    candidates.push_back({{"k", c.k}, {"silhouette", c.silhouette}, {"objective", c.objective}});
  json descriptors = json::array();
  for (const ClusterDescriptor& d : m.descriptors)
    descriptors.push_back(
        {{"cluster", d.cluster}, {"phrases", d.phrases}, {"action_units", d.action_units}});
  json thresholds = nullptr;
  if (m.thresholds) {
    json features = json::array();
    for (const FeatureThreshold& f : m.thresholds->features)
      features.push_back({{"feature", f.feature},
                          {"mean", f.mean},
                          {"stddev", f.stddev},
                          {"low", f.low},
                          {"high", f.high}});
    thresholds = {{"multiplier", m.thresholds->multiplier}, {"features", std::move(features)}};
  }
  return {
      {"modality", std::string(to_string(m.modality))},
      {"feature_names", m.feature_names},
      {"k", m.k},
      {"centroids", std::move(centroids)},
      {"standardizer", {{"mean", m.standardizer.mean}, {"stddev", m.standardizer.stddev}}},
      {"seed", m.seed},
      {"max_iter", m.max_iter},
      {"rel_tol", m.rel_tol},
      {"iterations", m.iterations},
      {"objective", m.objective},
      {"silhouette", optional_number(m.silhouette)},
      {"candidates", std::move(candidates)},
      {"descriptors", std::move(descriptors)},
      {"abs_floor", optional_number(m.abs_floor)},
      {"thresholds", std::move(thresholds)},
  };
}

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return require<double>(j, key);
}

ClusterModel model_from_payload(const json& p) {
  ClusterModel m;
  m.modality = parse_modality(require<std::string>(p, "modality"));
  m.feature_names = require<std::vector<std::string>>(p, "feature_names");
  m.k = require<std::size_t>(p, "k");
  m.centroids = Matrix(0, m.feature_names.size());
  for (const auto& row : require<std::vector<std::vector<double>>>(p, "centroids"))
    m.centroids.append_row(row);
  const json& st = p.at("standardizer");
  m.standardizer.mean = require<std::vector<double>>(st, "mean");
  m.standardizer.stddev = require<std::vector<double>>(st, "stddev");
  m.seed = require<std::uint64_t>(p, "seed");
  m.max_iter = require<std::size_t>(p, "max_iter");
  m.rel_tol = require<double>(p, "rel_tol");
  m.iterations = require<std::size_t>(p, "iterations");
  m.objective = require<double>(p, "objective");
  m.silhouette = read_optional(p, "silhouette");
  for (const json& c : p.at("candidates"))
    m.candidates.push_back({require<std::size_t>(c, "k"), require<double>(c, "silhouette"),
                            require<double>(c, "objective")});
  for (const json& d : p.at("descriptors"))
    m.descriptors.push_back({require<std::size_t>(d, "cluster"),
                             require<std::vector<std::string>>(d, "phrases"),
                             require<std::vector<int>>(d, "action_units")});
  m.abs_floor = read_optional(p, "abs_floor");
  if (p.contains("thresholds") && !p.at("thresholds").is_null()) {
    const json& t = p.at("thresholds");
    IntensityThresholds th;
    th.multiplier = require<double>(t, "multiplier");
    for (const json& f : t.at("features"))
      th.features.push_back({require<std::string>(f, "feature"), require<double>(f, "mean"),
                             require<double>(f, "stddev"), require<double>(f, "low"),
                             require<double>(f, "high")});
    m.thresholds = std::move(th);
  }

  if (m.k == 0 || m.centroids.rows() != m.k)
    throw Error("centroid count does not match k");
  if (m.standardizer.dim() != m.feature_names.size() ||
      m.standardizer.stddev.size() != m.feature_names.size())
    throw Error("standardizer dimension does not match the feature names");
  if (!m.descriptors.empty() && m.descriptors.size() != m.k)
    throw Error("descriptor count does not match k");
  return m;
}

}  // namespace

std::string serialize_model(const ClusterModel& model) {
  const json payload = model_payload(model);
  const json doc = {{"format", kModelFormat},
                    {"format_version", kModelFormatVersion},
                    {"tool_version", kVersion},
                    {"sha256", sha256_hex(payload.dump())},
                    {"model", payload}};
  return doc.dump(2) + "\n";
}

ModelArtifact parse_model(const std::string& contents) {
  json doc;
  try {
    doc = json::parse(contents);
  } catch (const json::exception& e) {
    throw CorruptionError(std::string("model artifact is truncated or malformed: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("format", "") != kModelFormat)
      throw CorruptionError("not an nvtext codebook file");
    if (doc.value("format_version", 0) != kModelFormatVersion)
      throw CorruptionError("unsupported codebook format version");
    if (!doc.contains("model") || !doc.contains("sha256"))
      throw CorruptionError("model artifact lacks payload or hash");
    ModelArtifact a;
    a.content_hash = require<std::string>(doc, "sha256");
    a.tool_version = require<std::string>(doc, "tool_version");
    const std::string actual = sha256_hex(doc.at("model").dump());
    if (actual != a.content_hash)
      throw CorruptionError("model artifact hash mismatch (stored " + a.content_hash +
                            ", computed " + actual + ")");
    a.model = model_from_payload(doc.at("model"));
    return a;
  } catch (const CorruptionError&) {
    throw;
  } catch (const Error& e) {
    throw CorruptionError(std::string("model artifact: ") + e.what());
  } catch (const json::exception& e) {
    throw CorruptionError(std::string("model artifact: ") + e.what());
  }
}

void write_model(const fs::path& path, const ClusterModel& model) {
  const std::string contents = serialize_model(model);
  std::ofstream out = open_out(path, "model artifact");
  out << contents;
  if (!out) throw Error("failed writing " + path.string());
}

ModelArtifact read_model(const fs::path& path) {
  std::ifstream in = open_in(path, "model artifact");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str());
  } catch (const CorruptionError& e) {
    throw CorruptionError(path.string() + ": " + e.what());
  }
}

void write_corpus(const fs::path& path, std::span<const CorpusRecord> records,
                  std::span<const AblationMode> modes) {
  std::vector<const CorpusRecord*> sorted;
  for (const CorpusRecord& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->segment_id < b->segment_id; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1]->segment_id == sorted[i]->segment_id)
      throw Error("write_corpus: duplicate segment id '" + sorted[i]->segment_id + "'");

  std::ostringstream body;
  for (const CorpusRecord* r : sorted) {
    json extended = json::object();
    json spans = json::object();
    bool special = true;
    for (AblationMode mode : modes) {
      const ExtendedText* e = r->find(mode);
      if (!e)
        throw Error("write_corpus: record '" + r->segment_id + "' lacks mode " +
                    std::string(mode_label(mode)));
      const std::string key(mode_key(mode));
      extended[key] = e->text;
      spans[key] = {{"text", {e->utterance.offset, e->utterance.length}},
                    {"visual", {e->visual.offset, e->visual.length}},
                    {"acoustic", {e->acoustic.offset, e->acoustic.length}}};
      special = e->text.starts_with("[CLS] ");
    }
    json rec = {{"segment_id", r->segment_id},
                {"split", std::string(to_string(r->split))},
                {"label", label_to_json(r->label)},
                {"text", r->text},
                {"visual_text", r->visual_text},
                {"acoustic_text", r->acoustic_text},
                {"visual_ids", r->visual_ids},
                {"acoustic_ids", r->acoustic_ids},
                {"missing_words", r->missing_words},
                {"special_tokens", special},
                {"extended_text", std::move(extended)},
                {"spans", std::move(spans)}};
    try {
      body << rec.dump() << '\n';
    } catch (const json::exception& e) {
      throw Error("write_corpus: record '" + r->segment_id + "': " + e.what());
    }
  }
  std::ofstream out = open_out(path, "corpus");
  out << body.str();
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<CorpusRecord> read_corpus(const fs::path& path) {
  std::ifstream in = open_in(path, "corpus");
  std::vector<CorpusRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (trim(line).empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
    try {
      const json j = json::parse(line);
      CorpusRecord r;
      r.segment_id = require<std::string>(j, "segment_id");
      r.split = parse_split(require<std::string>(j, "split"));
      r.label = label_from_json(j.at("label"));
      r.text = require<std::string>(j, "text");
      r.visual_text = require<std::string>(j, "visual_text");
      r.acoustic_text = require<std::string>(j, "acoustic_text");
      r.visual_ids = require<std::vector<std::size_t>>(j, "visual_ids");
      r.acoustic_ids = require<std::vector<std::size_t>>(j, "acoustic_ids");
      r.missing_words = j.value("missing_words", std::size_t{0});
      const TemplateOptions tmpl{!j.value("special_tokens", true)};
      for (const auto& [key, value] : j.at("extended_text").items()) {
        const AblationMode mode = parse_mode(key);
        const std::string text = value.get<std::string>();
        const ParsedExtendedText parsed = parse_extended_text(text, tmpl);
        ExtendedText e = assemble_extended_text(parsed.utterance,
                                                {parsed.visual, parsed.acoustic}, mode, tmpl);
        if (parsed.mode != mode || e.text != text)
          throw Error("extended text for mode " + key + " does not match its template");
        r.extended.push_back(std::move(e));
      }
      records.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw Error(where + "malformed record: " + e.what());
    } catch (const Error& e) {
      throw Error(where + e.what());
    }
  }
  return records;
}

}  // namespace nvtext
