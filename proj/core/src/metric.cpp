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

#include "rematch/metric.hpp"

#include <stdexcept>
#include <string>

namespace rematch {

MetricKind parse_metric(std::string_view name) {
  if (name == "rematch") return MetricKind::Rematch;
  if (name == "smatch") return MetricKind::Smatch;
  if (name == "labels" || name == "label") return MetricKind::Labels;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::Rematch: return "rematch";
    case MetricKind::Smatch: return "smatch";
    case MetricKind::Labels: return "labels";
  }
  return "unknown";
}

SimilarityScore score(MetricKind kind, const AmrGraph& a, const AmrGraph& b,
                      const MetricOptions& options) {
  switch (kind) {
    case MetricKind::Rematch: return rematch(a, b, options.frames, options.kinds);
    case MetricKind::Smatch: return smatch(a, b, options.smatch);
    case MetricKind::Labels: return label_jaccard(a, b);
  }
  throw std::invalid_argument("unknown metric");
}

BigInt search_space(MetricKind kind, const AmrGraph& a, const AmrGraph& b,
                    const MetricOptions& options) {
  switch (kind) {
    case MetricKind::Rematch: return feature_search_space(a, b, options.frames, options.kinds);
    case MetricKind::Smatch: return alignment_search_space(a, b, options.candidates);
    case MetricKind::Labels: return BigInt(label_set(a).size()) * label_set(b).size();
  }
  throw std::invalid_argument("unknown metric");
}

}  // namespace rematch
