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

#include "rematch/search_space.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rematch {

CandidateRule parse_candidate_rule(std::string_view text) {
  if (text == "all") return CandidateRule::All;
  if (text == "label") return CandidateRule::SameLabel;
  throw std::invalid_argument("unknown candidate rule '" + std::string(text) + "'");
}

BigInt alignment_search_space(const AmrGraph& a, const AmrGraph& b, CandidateRule rule) {
  if (rule == CandidateRule::All) return boost::multiprecision::pow(BigInt(b.node_count()), static_cast<unsigned>(a.node_count()));

  std::unordered_map<std::string, std::size_t> label_counts;
  for (const auto& inst : b.instances()) ++label_counts[inst.label];
  BigInt product = 1;
  for (const auto& inst : a.instances()) {
    auto it = label_counts.find(inst.label);
    product *= it == label_counts.end() ? 0 : it->second;
  }
  return product;
}

BigInt feature_search_space(const AmrGraph& a, const AmrGraph& b, const FrameMap& frames,
                            MotifKinds enabled) {
  return BigInt(motif_set(a, frames, enabled).size()) * motif_set(b, frames, enabled).size();
}

}  // namespace rematch
