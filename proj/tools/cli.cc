// tools/cli.cc

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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "nvtext/corpus_io.h"
#include "nvtext/version.h"

namespace nvtext::cli {

namespace fs = std::filesystem;

namespace {

// Invalid flag combination detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string join_modes(const std::vector<AblationMode>& modes) {
  std::string out;
  for (AblationMode m : modes) {
    if (!out.empty()) out += ',';
    out += mode_key(m);
  }
  return out;
}

std::vector<AblationMode> modes_from_flags(const std::vector<std::string>& flags) {
  if (flags.empty()) throw UsageError("--modes needs at least one of t, tv, ta, tav");
  std::string joined;
  for (const std::string& f : flags) {
    if (!joined.empty()) joined += ',';
    joined += f;
  }
  try {
    return parse_modes(joined);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string join_strings(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

void print_codebook(const ClusterModel& model, const std::vector<std::size_t>& assignments,
                    std::ostream& log) {
  std::vector<std::size_t> sizes(model.k, 0);
  for (std::size_t a : assignments) ++sizes[a];
  if (model.modality == Modality::kVisual) {
    log << std::left << std::setw(9) << "Cluster" << std::setw(9) << "Words"
        << std::setw(22) << "AUs" << "Textual Description (visual-text)\n";
    for (const ClusterDescriptor& d : model.descriptors) {
      std::string aus;
      for (int au : d.action_units) {
        if (!aus.empty()) aus += ',';
        aus += std::to_string(au);
      }
      log << std::setw(9) << d.cluster << std::setw(9) << sizes[d.cluster] << std::setw(22)
          << (aus.empty() ? "None" : aus) << join_strings(d.phrases, ", ") << '\n';
    }
  } else {
    log << std::left << std::setw(9) << "Cluster" << std::setw(9) << "Words"
        << "Textual Description (acoustic-text)\n";
    for (const ClusterDescriptor& d : model.descriptors)
      log << std::setw(9) << d.cluster << std::setw(9) << sizes[d.cluster]
          << join_strings(d.phrases, ", ") << '\n';
  }
  log << std::right;
}

}  // namespace

FitSummary run_fit(const FitConfig& cfg, std::ostream& log) {
  if (cfg.k_min < 2 || cfg.k_min > cfg.k_max)
    throw UsageError("need 2 <= --k-min <= --k-max");
  if (!(cfg.abs_floor >= 0.0)) throw UsageError("--abs-floor must be >= 0");
  if (!(cfg.sigma_mult >= 0.0)) throw UsageError("--sigma-mult must be >= 0");
  if (!(cfg.fallback_window >= 0.0)) throw UsageError("--fallback-window must be >= 0");
  if (cfg.out.empty()) throw UsageError("--out is required");

  const Dataset dataset = load_dataset(cfg.manifest);
  const std::vector<Segment> train = dataset.segments_in(Split::kTrain);
  if (train.empty()) throw Error("manifest has no train split segments");
  const LoadedFrames frames = load_frames(dataset, cfg.modality, train);
  const AlignmentResult aligned =
      align_corpus(train, frames.frames, cfg.modality, cfg.fallback_window);
  if (aligned.vectors.size() < 2)
    throw Error("only " + std::to_string(aligned.vectors.size()) +
                " word vectors could be aligned; need at least 2");

  const Matrix raw = stack_word_vectors(aligned.vectors);
  const auto& columns = expected_csv_columns(cfg.modality);
  std::vector<std::string> names(columns.begin() + 1, columns.end());

  SelectKOptions opts;
  opts.k_min = cfg.k_min;
  opts.k_max = cfg.k_max;
  opts.seed = cfg.seed;
  opts.kmeans = {cfg.max_iter, cfg.rel_tol};
  opts.silhouette_cap = cfg.silhouette_cap;
  ClusterFit fit = select_k(raw, cfg.modality, names, opts);

  std::optional<AUCatalog> catalog;
  if (cfg.au_catalog) catalog = load_au_catalog(*cfg.au_catalog);
  DescriptionOptions desc;
  desc.abs_floor = cfg.abs_floor;
  desc.sigma_multiplier = cfg.sigma_mult;
  desc.catalog = catalog ? &*catalog : nullptr;
  build_codebook(fit.model, raw, fit.assignments, desc);
  write_model(cfg.out, fit.model);

  log << "dataset " << dataset.manifest.dataset << ", modality " << to_string(cfg.modality)
      << ", train split: " << aligned.vectors.size() << " word vectors, "
      << aligned.missing.size() << " words missing, " << frames.dropped_rows
      << " non-finite frame rows dropped\n";
  log << "silhouette by k:";
  for (const KCandidate& c : fit.model.candidates) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " %zu:%.4f", c.k, c.silhouette);
    log << buf;
  }
  log << '\n';
  char buf[96];
  std::snprintf(buf, sizeof(buf), "selected k=%zu silhouette=%.6f", fit.model.k,
                *fit.model.silhouette);
  log << buf << '\n';
  print_codebook(fit.model, fit.assignments, log);
  log << "wrote " << cfg.out.string() << '\n';

  return {fit.model.k, *fit.model.silhouette, aligned.vectors.size(), aligned.missing.size()};
}

TextualizeSummary run_textualize(const TextualizeConfig& cfg, std::ostream& log) {
  if (cfg.modes.empty()) throw UsageError("--modes needs at least one mode");
  if (cfg.out.empty()) throw UsageError("--out is required");
  const bool need_visual = std::any_of(cfg.modes.begin(), cfg.modes.end(), mode_uses_visual);
  const bool need_acoustic =
      std::any_of(cfg.modes.begin(), cfg.modes.end(), mode_uses_acoustic);
  if (need_visual && !cfg.visual_model)
    throw UsageError("modes " + join_modes(cfg.modes) + " need --visual-model");
  if (need_acoustic && !cfg.acoustic_model)
    throw UsageError("modes " + join_modes(cfg.modes) + " need --acoustic-model");

  std::optional<ClusterModel> visual, acoustic;
  if (cfg.visual_model) visual = read_model(*cfg.visual_model).model;
  if (cfg.acoustic_model) acoustic = read_model(*cfg.acoustic_model).model;

  const Dataset dataset = load_dataset(cfg.manifest);
  LoadedFrames vframes, aframes;
  if (visual) vframes = load_frames(dataset, Modality::kVisual, dataset.segments);
  if (acoustic) aframes = load_frames(dataset, Modality::kAcoustic, dataset.segments);

  TextualizeOptions opts;
  opts.modes = cfg.modes;
  opts.fallback_window = cfg.fallback_window;
  opts.template_options.strip_special_tokens = cfg.strip_special_tokens;

  std::vector<CorpusRecord> records;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < dataset.segments.size(); ++i) {
    const Segment& s = dataset.segments[i];
    auto lookup = [&](const LoadedFrames& lf) -> const FrameSeries* {
      const auto it = lf.frames.find(s.id);
      return it == lf.frames.end() ? nullptr : &it->second;
    };
    ModalityInputs v{visual ? lookup(vframes) : nullptr, visual ? &*visual : nullptr};
    ModalityInputs a{acoustic ? lookup(aframes) : nullptr, acoustic ? &*acoustic : nullptr};
    CorpusRecord r = textualize_segment(s, v, a, opts);
    r.split = dataset.splits[i];
    skipped += r.missing_words;
    records.push_back(std::move(r));
  }
  write_corpus(cfg.out, records, cfg.modes);
  log << "textualized " << records.size() << " records, " << skipped
      << " words skipped (modes " << join_modes(cfg.modes) << ") -> " << cfg.out.string()
      << '\n';
  return {records.size(), skipped};
}

std::vector<ModeResult> run_baseline_cmd(const BaselineConfig& cfg, std::ostream& log) {
  if (cfg.modes.empty()) throw UsageError("--modes needs at least one mode");
  if (cfg.order < 1 || cfg.order > 2) throw UsageError("--order must be 1 or 2");
  const std::vector<CorpusRecord> records = read_corpus(cfg.corpus);
  if (records.empty()) throw Error("corpus " + cfg.corpus.string() + " is empty");

  BaselineOptions opts;
  opts.task = cfg.task;
  opts.features.order = cfg.order;
  opts.features.weighting = cfg.weighting;
  TrainConfig tc = TrainConfig::defaults(cfg.task);
  if (cfg.learning_rate) tc.learning_rate = *cfg.learning_rate;
  if (cfg.epochs) tc.epochs = *cfg.epochs;
  if (cfg.l2) tc.l2 = *cfg.l2;
  tc.seed = cfg.seed;
  opts.config = tc;

  std::vector<ModeResult> results;
  for (AblationMode mode : cfg.modes) results.push_back(run_baseline(records, mode, opts));

  const std::string dataset = cfg.dataset.empty() ? cfg.corpus.stem().string() : cfg.dataset;
  const std::string table = format_ablation_table(dataset, cfg.task, results);
  log << table;
  auto write = [](const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("failed writing " + path.string());
  };
  if (cfg.out) write(*cfg.out, ablation_json(dataset, cfg.task, results));
  if (cfg.table) write(*cfg.table, table);
  return results;
}

fs::path run_synth(const SynthConfig& cfg, std::ostream& log) {
  if (cfg.out.empty()) throw UsageError("--out is required");
  const SynthCorpus corpus = gen_corpus(cfg.spec);
  const fs::path manifest = write_synth_corpus(corpus, cfg.out);
  const SynthSpec& s = cfg.spec;
  log << "synthetic corpus '" << s.dataset << "': " << s.segments << " segments x "
      << s.words_per_segment << " words, k_visual=" << s.visual_clusters
      << " k_acoustic=" << s.acoustic_clusters << " separation=" << s.separation
      << " dominant_prob=" << s.dominant_prob << " label=" << to_string(s.label_rule) << '/'
      << (s.label_kind == LabelKind::kBinary ? "binary" : "sentiment") << " seed=" << s.seed
      << '\n';
  log << "wrote " << manifest.string() << '\n';
  return manifest;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"nvtext: turn word-aligned facial and acoustic features into text"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // fit
  FitConfig fit;
  std::string fit_modality;
  std::string au_catalog;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a cluster codebook on the train split");
  fit_cmd->add_option("--manifest", fit.manifest, "Dataset manifest (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  fit_cmd->add_option("--modality", fit_modality, "visual or acoustic")
      ->required()
      ->check(CLI::IsMember({"visual", "acoustic"}));
  fit_cmd->add_option("--k-min", fit.k_min, "Smallest K to try")->capture_default_str();
  fit_cmd->add_option("--k-max", fit.k_max, "Largest K to try")->capture_default_str();
  fit_cmd->add_option("--seed", fit.seed, "Random seed")->capture_default_str();
  fit_cmd->add_option("--abs-floor", fit.abs_floor, "Minimum mean AU intensity of a dominant AU")
      ->capture_default_str();
  fit_cmd->add_option("--sigma-mult", fit.sigma_mult,
                      "Low/high cutoffs at mean -/+ this many stddevs")
      ->capture_default_str();
  fit_cmd->add_option("--fallback-window", fit.fallback_window,
                      "Seconds around a word midpoint searched when its window is empty")
      ->capture_default_str();
  fit_cmd->add_option("--max-iter", fit.max_iter, "Lloyd iteration cap")->capture_default_str();
  fit_cmd->add_option("--rel-tol", fit.rel_tol, "Relative objective tolerance")
      ->capture_default_str();
  fit_cmd->add_option("--silhouette-cap", fit.silhouette_cap,
                      "Points scored by silhouette before subsampling")
      ->capture_default_str();
  fit_cmd->add_option("--au-catalog", au_catalog, "JSON AU descriptor catalog")
      ->check(CLI::ExistingFile);
  fit_cmd->add_option("--out", fit.out, "Output model artifact")->required();

  // textualize
  TextualizeConfig tx;
  std::vector<std::string> tx_modes{"tav"};
  std::string visual_model, acoustic_model;
  auto* tx_cmd = app.add_subcommand("textualize", "Emit visual/acoustic-text corpus records");
  tx_cmd->add_option("--manifest", tx.manifest, "Dataset manifest (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  tx_cmd->add_option("--visual-model", visual_model, "Visual codebook artifact")
      ->check(CLI::ExistingFile);
  tx_cmd->add_option("--acoustic-model", acoustic_model, "Acoustic codebook artifact")
      ->check(CLI::ExistingFile);
  tx_cmd->add_option("--modes", tx_modes, "Ablation modes: t, tv, ta, tav")
      ->delimiter(',')
      ->capture_default_str();
  tx_cmd->add_option("--fallback-window", tx.fallback_window, "Empty-window fallback (s)")
      ->capture_default_str();
  tx_cmd->add_flag("--strip-special-tokens", tx.strip_special_tokens,
                   "Omit the leading [CLS] and trailing [SEP]");
  tx_cmd->add_option("--out", tx.out, "Output corpus (JSONL)")->required();

  // baseline
  BaselineConfig bl;
  std::string task = "binary";
  std::string weighting = "tfidf";
  std::vector<std::string> bl_modes{"t", "tv", "ta", "tav"};
  double lr = 0.0, l2 = 0.0;
  std::size_t epochs = 0;
  std::string bl_out, bl_table;
  auto* bl_cmd = app.add_subcommand("baseline", "Train the n-gram linear baseline per mode");
  bl_cmd->add_option("--corpus", bl.corpus, "Corpus (JSONL) from textualize")
      ->required()
      ->check(CLI::ExistingFile);
  bl_cmd->add_option("--task", task, "binary or regression")
      ->check(CLI::IsMember({"binary", "regression"}))
      ->capture_default_str();
  bl_cmd->add_option("--modes", bl_modes, "Ablation modes")->delimiter(',')->capture_default_str();
  bl_cmd->add_option("--dataset", bl.dataset, "Row name in the table");
  bl_cmd->add_option("--order", bl.order, "n-gram order (1 or 2)")->capture_default_str();
  bl_cmd->add_option("--weighting", weighting, "counts or tfidf")
      ->check(CLI::IsMember({"counts", "tfidf"}))
      ->capture_default_str();
  auto* lr_opt = bl_cmd->add_option("--learning-rate", lr, "Gradient descent step");
  auto* ep_opt = bl_cmd->add_option("--epochs", epochs, "Full-batch epochs");
  auto* l2_opt = bl_cmd->add_option("--l2", l2, "L2 strength");
  bl_cmd->add_option("--seed", bl.seed, "Initialization seed")->capture_default_str();
  bl_cmd->add_option("--out", bl_out, "Metrics JSON output");
  bl_cmd->add_option("--table", bl_table, "Aligned text table output");

  // synth
  SynthConfig sy;
  std::string rule = "acoustic-cluster";
  std::string kind = "binary";
  auto* sy_cmd = app.add_subcommand("synth", "Generate a synthetic corpus with planted clusters");
  SynthSpec& sp = sy.spec;
  sy_cmd->add_option("--seed", sp.seed, "Random seed")->capture_default_str();
  sy_cmd->add_option("--dataset", sp.dataset, "Dataset name")->capture_default_str();
  sy_cmd->add_option("--k-visual", sp.visual_clusters, "Planted visual clusters")
      ->capture_default_str();
  sy_cmd->add_option("--k-acoustic", sp.acoustic_clusters, "Planted acoustic clusters")
      ->capture_default_str();
  sy_cmd->add_option("--separation", sp.separation, "Centroid distance in noise stddevs")
      ->capture_default_str();
  sy_cmd->add_option("--segments", sp.segments, "Segment count")->capture_default_str();
  sy_cmd->add_option("--words-per-segment", sp.words_per_segment, "Words per segment")
      ->capture_default_str();
  sy_cmd->add_option("--dominant-prob", sp.dominant_prob,
                     "Probability a word uses its segment's dominant cluster")
      ->capture_default_str();
  sy_cmd->add_option("--label-rule", rule, "acoustic-cluster, text-token or random")
      ->check(CLI::IsMember({"acoustic-cluster", "text-token", "random"}))
      ->capture_default_str();
  sy_cmd->add_option("--label-kind", kind, "binary or sentiment")
      ->check(CLI::IsMember({"binary", "sentiment"}))
      ->capture_default_str();
  sy_cmd->add_option("--out", sy.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fit_cmd->parsed()) {
      fit.modality = parse_modality(fit_modality);
      if (!au_catalog.empty()) fit.au_catalog = au_catalog;
      run_fit(fit, out);
    } else if (tx_cmd->parsed()) {
      tx.modes = modes_from_flags(tx_modes);
      if (!visual_model.empty()) tx.visual_model = visual_model;
      if (!acoustic_model.empty()) tx.acoustic_model = acoustic_model;
      run_textualize(tx, out);
    } else if (bl_cmd->parsed()) {
      bl.task = parse_task(task);
      bl.modes = modes_from_flags(bl_modes);
      bl.weighting = weighting == "counts" ? Weighting::kCounts : Weighting::kTfIdf;
      if (*lr_opt) bl.learning_rate = lr;
      if (*ep_opt) bl.epochs = epochs;
      if (*l2_opt) bl.l2 = l2;
      if (!bl_out.empty()) bl.out = bl_out;
      if (!bl_table.empty()) bl.table = bl_table;
      run_baseline_cmd(bl, out);
    } else if (sy_cmd->parsed()) {
      sp.label_rule = parse_label_rule(rule);
      sp.label_kind = kind == "binary" ? LabelKind::kBinary : LabelKind::kSentiment;
      run_synth(sy, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitProcessing;
  }
  return kExitOk;
}

}  // namespace nvtext::cli
