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

#include "rematch/similarity.hpp"

namespace rematch {

SimilarityScore jaccard(const FeatureSet& a, const FeatureSet& b, std::string metric) {
  SimilarityScore s;
  s.metric = std::move(metric);
  s.size_a = a.size();
  s.size_b = b.size();
  s.matched = intersection_size(a, b);
  const std::uint64_t union_size = s.size_a + s.size_b - s.matched;
  if (union_size == 0) {
    s.numerator = 1;
    s.denominator = 1;
  } else {
    s.numerator = s.matched;
    s.denominator = union_size;
  }
  return s;
}

SimilarityScore rematch(const AmrGraph& a, const AmrGraph& b, const FrameMap& frames,
                        MotifKinds enabled) {
  return jaccard(motif_set(a, frames, enabled), motif_set(b, frames, enabled), "rematch");
}

SimilarityScore label_jaccard(const AmrGraph& a, const AmrGraph& b) {
  return jaccard(label_set(a), label_set(b), "labels");
}

}  // namespace rematch
