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

#include "rematch/eval.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include <json.hpp>

#include "parallel.hpp"
#include "rematch/penman.hpp"

namespace rematch {

std::vector<ScoredPair> score_rewired(const std::vector<RewiredPair>& pairs,
                                      const EvalOptions& options) {
  std::vector<ScoredPair> scored(pairs.size());
  detail::parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    const RewiredPair& p = pairs[i];
    scored[i] = {p.id, score(options.metric, p.original, p.rewired, options.metric_options).value(),
                 p.gold};
  });
  return scored;
}

std::vector<LevelRow> level_table(const std::vector<RewiredPair>& pairs,
                                  const std::vector<ScoredPair>& scored, unsigned bins) {
  bins = std::max(1u, bins);
  std::map<long, LevelRow> rows;
  for (std::size_t i = 0; i < pairs.size() && i < scored.size(); ++i) {
    const double fraction = pairs[i].total_edges == 0
                                ? 0.0
                                : static_cast<double>(pairs[i].swapped_edges) /
                                      static_cast<double>(pairs[i].total_edges);
    const long bin = std::lround(fraction * bins);
    LevelRow& row = rows[bin];
    row.swap_fraction = static_cast<double>(bin) / bins;
    ++row.pairs;
    row.mean_gold += scored[i].gold_score;
    row.mean_score += scored[i].metric_score;
  }
  std::vector<LevelRow> out;
  for (auto& [bin, row] : rows) {
    row.mean_gold /= static_cast<double>(row.pairs);
    row.mean_score /= static_cast<double>(row.pairs);
    out.push_back(row);
  }
  return out;
}

StructuralReport eval_structural(const std::vector<RewiredPair>& dataset,
                                 const EvalOptions& options) {
  StructuralReport report;
  report.scored = score_rewired(dataset, options);
  report.levels = level_table(dataset, report.scored, options.level_bins);
  report.rho = spearman(report.scored);
  return report;
}

std::vector<SemanticPair> read_semantic_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pair file: " + path.string());
  std::vector<SemanticPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string id = "line " + std::to_string(line_no);
    try {
      auto j = nlohmann::json::parse(line);
      if (j.contains("id")) id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
      pairs.push_back({id, j.at("gold").get<double>(), parse_penman(j.at("amr_a").get<std::string>()),
                       parse_penman(j.at("amr_b").get<std::string>())});
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + " (pair " + id +
                               "): " + e.what());
    }
  }
  return pairs;
}

SemanticReport eval_semantic(const std::vector<SemanticPair>& pairs, const EvalOptions& options) {
  SemanticReport report;
  report.scored.resize(pairs.size());
  detail::parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    const SemanticPair& p = pairs[i];
    report.scored[i] = {p.id, score(options.metric, p.a, p.b, options.metric_options).value(), p.gold};
  });
  report.rho = spearman(report.scored);
  return report;
}

}  // namespace rematch
