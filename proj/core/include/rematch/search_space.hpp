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

#include <boost/multiprecision/cpp_int.hpp>

#include "rematch/amr_graph.hpp"
#include "rematch/motifs.hpp"

namespace rematch {

using BigInt = boost::multiprecision::cpp_int;

// Which nodes of the second graph count as alignment candidates for a node of
// the first: every node, or only nodes carrying the same concept.
enum class CandidateRule : std::uint8_t { All, SameLabel };

CandidateRule parse_candidate_rule(std::string_view text);

/// Product over nodes of `a` of the number of candidate nodes in `b`.
BigInt alignment_search_space(const AmrGraph& a, const AmrGraph& b,
                              CandidateRule rule = CandidateRule::All);

/// |motif_set(a)| * |motif_set(b)|.
BigInt feature_search_space(const AmrGraph& a, const AmrGraph& b, const FrameMap& frames,
                            MotifKinds enabled = {});

}  // namespace rematch
