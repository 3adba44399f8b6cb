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
#include <string>

#include "rematch/amr_graph.hpp"
#include "rematch/motifs.hpp"

namespace rematch {

/// A score kept as an exact ratio. `matched`, `size_a` and `size_b` are the
/// intersection and the two set sizes for Jaccard-style metrics, or matched
/// triples and the two triple counts for smatch.
struct SimilarityScore {
  std::string metric;
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;
  std::uint64_t matched = 0;
  std::uint64_t size_a = 0;
  std::uint64_t size_b = 0;

  double value() const noexcept {
    return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

/// |A ∩ B| / |A ∪ B|; two empty sets score 1.
SimilarityScore jaccard(const FeatureSet& a, const FeatureSet& b, std::string metric = "jaccard");

SimilarityScore rematch(const AmrGraph& a, const AmrGraph& b, const FrameMap& frames,
                        MotifKinds enabled = {});

SimilarityScore label_jaccard(const AmrGraph& a, const AmrGraph& b);

}  // namespace rematch
