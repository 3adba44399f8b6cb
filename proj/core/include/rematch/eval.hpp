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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rematch/amr_graph.hpp"
#include "rematch/metric.hpp"
#include "rematch/rare.hpp"
#include "rematch/spearman.hpp"

namespace rematch {

struct EvalOptions {
  MetricKind metric = MetricKind::Rematch;
  MetricOptions metric_options;
  unsigned jobs = 1;
  // Swap fractions are grouped to the nearest multiple of 1/level_bins.
  unsigned level_bins = 8;
};

struct LevelRow {
  double swap_fraction = 0.0;
  std::size_t pairs = 0;
  double mean_gold = 0.0;
  double mean_score = 0.0;
};

struct StructuralReport {
  double rho = 0.0;
  std::vector<ScoredPair> scored;
  std::vector<LevelRow> levels;
  double rho_points() const { return 100.0 * rho; }
};

/// Scores (original, rewired) with the chosen metric; order follows input.
std::vector<ScoredPair> score_rewired(const std::vector<RewiredPair>& pairs, const EvalOptions& options);

std::vector<LevelRow> level_table(const std::vector<RewiredPair>& pairs,
                                  const std::vector<ScoredPair>& scored, unsigned bins);

/// Spearman of metric scores against the rewiring gold. Throws DegenerateInput.
StructuralReport eval_structural(const std::vector<RewiredPair>& dataset, const EvalOptions& options);

struct SemanticPair {
  std::string id;
  double gold = 0.0;
  AmrGraph a;
  AmrGraph b;
};

/// JSON lines of `{"id", "gold", "amr_a", "amr_b"}` with Penman strings.
std::vector<SemanticPair> read_semantic_pairs(const std::filesystem::path& path);

struct SemanticReport {
  double rho = 0.0;
  std::vector<ScoredPair> scored;
  double rho_points() const { return 100.0 * rho; }
};

SemanticReport eval_semantic(const std::vector<SemanticPair>& pairs, const EvalOptions& options);

}  // namespace rematch
