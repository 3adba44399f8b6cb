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
#include <string_view>

#include "rematch/amr_graph.hpp"
#include "rematch/motifs.hpp"
#include "rematch/search_space.hpp"
#include "rematch/similarity.hpp"
#include "rematch/smatch.hpp"

namespace rematch {

enum class MetricKind : std::uint8_t { Rematch, Smatch, Labels };

/// `rematch`, `smatch` or `labels`.
MetricKind parse_metric(std::string_view name);
std::string_view to_string(MetricKind kind);

struct MetricOptions {
  FrameMap frames;
  MotifKinds kinds = MotifKinds::all();
  SmatchOptions smatch;
  CandidateRule candidates = CandidateRule::All;
};

SimilarityScore score(MetricKind kind, const AmrGraph& a, const AmrGraph& b,
                      const MetricOptions& options);

/// Alignment search space for smatch, feature-set product for the
/// feature-based metrics.
BigInt search_space(MetricKind kind, const AmrGraph& a, const AmrGraph& b,
                    const MetricOptions& options);

}  // namespace rematch
