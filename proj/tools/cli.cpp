// Copyright 2026 The rematch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>

#include <CLI11.hpp>

#include "rematch/bench.hpp"
#include "rematch/corpus.hpp"
#include "rematch/eval.hpp"
#include "rematch/metric.hpp"
#include "rematch/motifs.hpp"
#include "rematch/penman.hpp"
#include "rematch/rare.hpp"
#include "rematch/synth.hpp"

namespace rematch::cli {
namespace {

// Thrown for problems with the input data (as opposed to the command line).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "not a number: '" + item + "'");
    }
  }
  return out;
}

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct CommonOptions {
  std::string frames;
  std::string kinds = "a,i,r";
  bool no_invert = false;
  unsigned restarts = 4;
  std::uint64_t seed = 42;
  std::string candidates = "all";
  unsigned jobs = 1;
};

void add_motif_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--frames", o.frames,
                  "TSV of propbank_frame<TAB>generalized_frame applied to frame concepts")
      ->envname("AMR_FRAMES");
  cmd->add_option("--kinds", o.kinds, "Motif kinds to use, a subset of a,i,r")->capture_default_str();
  cmd->add_flag("--no-invert-normalize", o.no_invert,
                "Keep :X-of roles as written instead of flipping them to :X");
}

void add_metric_flags(CLI::App* cmd, CommonOptions& o) {
  add_motif_flags(cmd, o);
  cmd->add_option("--restarts", o.restarts, "smatch hill-climbing restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  cmd->add_option("--candidates", o.candidates,
                  "Alignment candidates counted in the smatch search space: all|label")
      ->check(CLI::IsMember({"all", "label"}))
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads for pair scoring")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

LoadOptions load_options(const CommonOptions& o, bool skip_errors = false) {
  LoadOptions lo;
  lo.parse.normalize_inverse_roles = !o.no_invert;
  lo.policy = skip_errors ? ErrorPolicy::SkipAndWarn : ErrorPolicy::FailFast;
  return lo;
}

std::vector<CorpusEntry> load(const std::string& path, const LoadOptions& lo, std::ostream& err) {
  if (!std::filesystem::exists(path)) throw DataError("no such file: " + path);
  LoadResult r = load_corpus(path, lo);
  for (const auto& w : r.warnings) err << "warning: " << path << ": " << w << "\n";
  return std::move(r.entries);
}

FrameMap frames_from(const CommonOptions& o, std::ostream& err) {
  if (o.frames.empty()) return {};
  std::vector<std::string> warnings;
  FrameMap map = load_frame_map(o.frames, warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return map;
}

MetricOptions metric_options(const CommonOptions& o, std::ostream& err) {
  MetricOptions m;
  m.frames = frames_from(o, err);
  m.kinds = MotifKinds::parse(o.kinds);
  m.smatch.restarts = o.restarts;
  m.smatch.seed = o.seed;
  m.candidates = parse_candidate_rule(o.candidates);
  return m;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path);
  out << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"AMR similarity: rematch motifs, smatch baseline, RARE rewiring benchmark", "rematch"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  CommonOptions common;

  // parse
  std::string parse_file;
  bool skip_errors = false;
  bool single_line = false;
  auto* parse_cmd = app.add_subcommand("parse", "Validate a Penman corpus and print it normalized");
  parse_cmd->add_option("file", parse_file, "Penman corpus")->required();
  parse_cmd->add_flag("--no-invert-normalize", common.no_invert,
                      "Keep :X-of roles as written instead of flipping them to :X");
  parse_cmd->add_flag("--skip-errors", skip_errors, "Skip malformed blocks with a warning");
  parse_cmd->add_flag("--single-line", single_line, "Print each graph on one line");

  // motifs
  std::string motif_file;
  auto* motifs_cmd = app.add_subcommand("motifs", "Print the sorted canonical motif set of each graph");
  motifs_cmd->add_option("file", motif_file, "Penman corpus")->required();
  add_motif_flags(motifs_cmd, common);

  // score
  std::string metric_name, file_a, file_b;
  auto* score_cmd = app.add_subcommand("score", "Score paired graphs block by block (TSV id, score)");
  score_cmd->add_option("metric", metric_name, "rematch|smatch|labels")
      ->required()
      ->check(CLI::IsMember({"rematch", "smatch", "labels"}));
  score_cmd->add_option("fileA", file_a, "First corpus")->required();
  score_cmd->add_option("fileB", file_b, "Second corpus")->required();
  add_metric_flags(score_cmd, common);

  // rare
  std::string rare_corpus, rare_out, levels_text, split_text = "0.8,0.1,0.1";
  std::size_t max_attempts = 0;
  auto* rare_cmd = app.add_subcommand("rare", "Generate the rewired-pair benchmark from a corpus");
  rare_cmd->add_option("corpus", rare_corpus, "Penman corpus")->required();
  rare_cmd->add_option("--out", rare_out, "Output directory")->required();
  rare_cmd->add_option("--seed", common.seed, "Random seed")->capture_default_str();
  rare_cmd->add_option("--levels", levels_text,
                       "Comma-separated swap fractions (default 0,0.125,...,1)");
  rare_cmd->add_option("--split", split_text, "train,dev,test fractions")->capture_default_str();
  rare_cmd->add_option("--max-attempts", max_attempts,
                       "Attempts without progress before a level is flagged infeasible (default 100*|E|)");
  rare_cmd->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  rare_cmd->add_flag("--no-invert-normalize", common.no_invert,
                     "Keep :X-of roles as written instead of flipping them to :X");

  // eval-structural
  std::string dataset_path, eval_metric = "rematch", scores_out;
  unsigned bins = 8;
  auto* es_cmd = app.add_subcommand("eval-structural",
                                    "Spearman correlation of a metric with rewiring gold scores");
  es_cmd->add_option("dataset", dataset_path, "RARE JSON-lines file")->required();
  es_cmd->add_option("--metric", eval_metric, "rematch|smatch|labels")
      ->check(CLI::IsMember({"rematch", "smatch", "labels"}))
      ->capture_default_str();
  es_cmd->add_option("--bins", bins, "Swap-fraction bins in the per-level table")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  es_cmd->add_option("--scores", scores_out, "Also write per-pair TSV id, score, gold");
  add_metric_flags(es_cmd, common);

  // eval-semantic
  std::string pairs_path;
  auto* sem_cmd = app.add_subcommand("eval-semantic",
                                     "Spearman correlation of a metric with sentence-similarity gold");
  sem_cmd->add_option("pairs", pairs_path, "JSON lines of {id, gold, amr_a, amr_b}")->required();
  sem_cmd->add_option("--metric", eval_metric, "rematch|smatch|labels")
      ->check(CLI::IsMember({"rematch", "smatch", "labels"}))
      ->capture_default_str();
  sem_cmd->add_option("--scores", scores_out, "Also write per-pair TSV id, score, gold");
  add_metric_flags(sem_cmd, common);

  // bench
  std::string bench_corpus, bench_out, metrics_text = "rematch,smatch";
  std::size_t bench_pairs = 1000;
  unsigned repeats = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time metrics on sampled pairs and fit log-log slopes");
  bench_cmd->add_option("corpus", bench_corpus, "Penman corpus")->required();
  bench_cmd->add_option("--pairs", bench_pairs, "Pairs to sample")->capture_default_str();
  bench_cmd->add_option("--metrics", metrics_text, "Comma-separated metrics")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "CSV output (default: standard output)");
  bench_cmd->add_option("--repeats", repeats, "Timed runs per pair; the fastest is kept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_metric_flags(bench_cmd, common);

  // synth
  SynthConfig synth;
  std::string synth_out;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic AMR-like corpus");
  synth_cmd->add_option("--graphs", synth.graphs, "Number of graphs")->capture_default_str();
  synth_cmd->add_option("--min-size", synth.min_size, "Smallest graph size")->capture_default_str();
  synth_cmd->add_option("--max-size", synth.max_size, "Largest graph size")->capture_default_str();
  synth_cmd->add_option("--attribute-probability", synth.attribute_probability,
                        "Chance that a node carries attributes")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  synth_cmd->add_option("--reentrancy", synth.reentrancy, "Chance of an extra edge per node")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("--out", synth_out, "Output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    MotifKinds::parse(common.kinds);
  } catch (const std::invalid_argument& e) {
    err << "error: --kinds: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (parse_cmd->parsed()) {
      auto entries = load(parse_file, load_options(common, skip_errors), err);
      for (const auto& e : entries)
        out << format_entry(e, single_line ? PenmanLayout::SingleLine : PenmanLayout::Indented);
      return kOk;
    }

    if (motifs_cmd->parsed()) {
      auto entries = load(motif_file, load_options(common), err);
      FrameMap frames = frames_from(common, err);
      MotifKinds kinds = MotifKinds::parse(common.kinds);
      for (const auto& e : entries) {
        if (entries.size() > 1) out << "# ::id " << e.id << "\n";
        for (const auto& m : motif_set(e.graph, frames, kinds)) out << m << "\n";
        if (entries.size() > 1) out << "\n";
      }
      return kOk;
    }

    if (score_cmd->parsed()) {
      const MetricKind metric = parse_metric(metric_name);
      if (metric == MetricKind::Smatch) err << "seed: " << common.seed << "\n";
      auto a = load(file_a, load_options(common), err);
      auto b = load(file_b, load_options(common), err);
      if (a.size() != b.size())
        throw DataError("block count differs: " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
      const MetricOptions options = metric_options(common, err);
      std::vector<double> scores(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) scores[i] = score(metric, a[i].graph, b[i].graph, options).value();
      for (std::size_t i = 0; i < a.size(); ++i) out << a[i].id << "\t" << format_score(scores[i]) << "\n";
      return kOk;
    }

    if (rare_cmd->parsed()) {
      err << "seed: " << common.seed << "\n";
      SpectrumConfig config;
      config.seed = common.seed;
      if (!levels_text.empty()) config.levels = parse_number_list(levels_text, "--levels");
      if (max_attempts > 0) config.max_attempts = max_attempts;
      auto split = parse_number_list(split_text, "--split");
      if (split.size() != 3) throw CLI::ValidationError("--split", "expected three fractions");
      if (std::any_of(split.begin(), split.end(), [](double f) { return f < 0; }) ||
          std::abs(split[0] + split[1] + split[2] - 1.0) > 1e-9)
        throw CLI::ValidationError("--split", "fractions must be non-negative and sum to 1");
      if (!std::is_sorted(config.levels.begin(), config.levels.end()) ||
          std::any_of(config.levels.begin(), config.levels.end(), [](double f) { return f < 0 || f > 1; }))
        throw CLI::ValidationError("--levels", "fractions must be ascending and within [0, 1]");
      auto entries = load(rare_corpus, load_options(common, true), err);
      Dataset ds = build_dataset(entries, config, {split[0], split[1], split[2]}, common.jobs);
      write_dataset(ds, rare_out);
      std::size_t infeasible = 0;
      for (const auto* s : {&ds.train, &ds.dev, &ds.test})
        for (const auto& p : *s) infeasible += p.infeasible ? 1 : 0;
      err << "sources " << ds.train_sources.size() << "/" << ds.dev_sources.size() << "/"
          << ds.test_sources.size() << ", pairs " << ds.train.size() << "/" << ds.dev.size() << "/"
          << ds.test.size() << ", infeasible " << infeasible << ", skipped " << ds.skipped.size()
          << "\n";
      return kOk;
    }

    if (es_cmd->parsed() || sem_cmd->parsed()) {
      EvalOptions eo;
      eo.metric = parse_metric(eval_metric);
      eo.metric_options = metric_options(common, err);
      eo.jobs = common.jobs;
      eo.level_bins = bins;
      if (eo.metric == MetricKind::Smatch) err << "seed: " << common.seed << "\n";

      std::vector<ScoredPair> scored;
      std::vector<LevelRow> levels;
      if (es_cmd->parsed()) {
        auto dataset = read_dataset(dataset_path);
        scored = score_rewired(dataset, eo);
        levels = level_table(dataset, scored, eo.level_bins);
      } else {
        auto pairs = read_semantic_pairs(pairs_path);
        for (const auto& p : pairs) {
          ScoredPair sp{p.id, score(eo.metric, p.a, p.b, eo.metric_options).value(), p.gold};
          scored.push_back(std::move(sp));
        }
      }
      if (!scores_out.empty()) {
        std::string tsv;
        for (const auto& s : scored)
          tsv += s.id + "\t" + format_score(s.metric_score) + "\t" + format_score(s.gold_score) + "\n";
        write_text(scores_out, tsv);
      }
      const double rho = spearman(std::span<const ScoredPair>(scored));
      out << "metric\t" << to_string(eo.metric) << "\n";
      out << "pairs\t" << scored.size() << "\n";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", 100.0 * rho);
      out << "spearman\t" << buf << "\n";
      if (!levels.empty()) {
        out << "swap_fraction\tpairs\tmean_gold\tmean_score\n";
        for (const auto& row : levels)
          out << format_score(row.swap_fraction) << "\t" << row.pairs << "\t"
              << format_score(row.mean_gold) << "\t" << format_score(row.mean_score) << "\n";
      }
      return kOk;
    }

    if (bench_cmd->parsed()) {
      err << "seed: " << common.seed << "\n";
      BenchOptions bo;
      bo.pairs = bench_pairs;
      bo.seed = common.seed;
      bo.repeats = repeats;
      bo.metric_options = metric_options(common, err);
      bo.metrics.clear();
      std::stringstream ss(metrics_text);
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        try {
          bo.metrics.push_back(parse_metric(name));
        } catch (const std::invalid_argument& e) {
          throw CLI::ValidationError("--metrics", e.what());
        }
      }
      auto entries = load(bench_corpus, load_options(common), err);
      auto results = bench(entries, bo);
      std::string csv = bench_csv(results);
      std::ostream& summary = bench_out.empty() ? err : out;
      if (bench_out.empty()) out << csv; else write_text(bench_out, csv);
      for (const auto& r : results) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", r.fit.slope);
        summary << "slope\t" << to_string(r.metric) << "\t" << buf << "\t(" << r.fit.points
                << " pairs with N > 10^1.5)\n";
      }
      return kOk;
    }

    if (synth_cmd->parsed()) {
      err << "seed: " << synth.seed << "\n";
      std::string text;
      for (const auto& e : synthesize_corpus(synth)) text += format_entry(e);
      if (synth_out.empty()) out << text; else write_text(synth_out, text);
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}

}  // namespace rematch::cli
