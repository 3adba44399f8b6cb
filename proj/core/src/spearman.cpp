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

#include "rematch/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rematch {
namespace {

std::string describe(DegenerateSide side) {
  switch (side) {
    case DegenerateSide::TooFewPairs: return "DegenerateInput: fewer than two pairs";
    case DegenerateSide::Metric: return "DegenerateInput: metric scores are constant";
    case DegenerateSide::Gold: return "DegenerateInput: gold scores are constant";
    case DegenerateSide::Both: return "DegenerateInput: metric and gold scores are constant";
  }
  return "DegenerateInput";
}

bool constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

DegenerateInput::DegenerateInput(DegenerateSide side) : std::domain_error(describe(side)), side_(side) {}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> metric, std::span<const double> gold) {
  if (metric.size() != gold.size()) throw std::invalid_argument("spearman: column lengths differ");
  if (metric.size() < 2) throw DegenerateInput(DegenerateSide::TooFewPairs);
  const bool flat_metric = constant(metric);
  const bool flat_gold = constant(gold);
  if (flat_metric && flat_gold) throw DegenerateInput(DegenerateSide::Both);
  if (flat_metric) throw DegenerateInput(DegenerateSide::Metric);
  if (flat_gold) throw DegenerateInput(DegenerateSide::Gold);

  const auto rx = average_ranks(metric);
  const auto ry = average_ranks(gold);
  const double n = static_cast<double>(rx.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const ScoredPair> pairs) {
  std::vector<double> metric, gold;
  metric.reserve(pairs.size());
  gold.reserve(pairs.size());
  for (const auto& p : pairs) {
    metric.push_back(p.metric_score);
    gold.push_back(p.gold_score);
  }
  return spearman(metric, gold);
}

}  // namespace rematch
