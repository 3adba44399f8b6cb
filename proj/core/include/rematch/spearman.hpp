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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rematch {

struct ScoredPair {
  std::string id;
  double metric_score = 0.0;
  double gold_score = 0.0;
};

enum class DegenerateSide : std::uint8_t { TooFewPairs, Metric, Gold, Both };

class DegenerateInput : public std::domain_error {
 public:
  explicit DegenerateInput(DegenerateSide side);
  DegenerateSide side() const noexcept { return side_; }

 private:
  DegenerateSide side_;
};

/// Ranks starting at 1; tied values share the mean of their ranks.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman's rho: Pearson correlation of average ranks. Throws
/// DegenerateInput for fewer than two pairs or a constant column.
double spearman(std::span<const double> metric, std::span<const double> gold);
double spearman(std::span<const ScoredPair> pairs);

}  // namespace rematch
