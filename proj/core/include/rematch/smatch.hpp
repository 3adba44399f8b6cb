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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rematch/amr_graph.hpp"
#include "rematch/similarity.hpp"

namespace rematch {

struct SmatchOptions {
  unsigned restarts = 4;
  std::uint64_t seed = 42;
};

/// Partial injection from nodes of one graph into another, with the number
/// of triples it matches.
struct AlignmentState {
  std::vector<std::optional<NodeIndex>> mapping;
  std::size_t matched = 0;
};

/// Instance triples, one `top` triple (valued with the root concept), attribute
/// triples and relation triples.
std::size_t triple_count(const AmrGraph& g) noexcept;

/// Triples of `a` matched in `b` under `mapping`. Throws std::invalid_argument
/// when the mapping is not an injection into `b`.
std::size_t matched_triples(const AmrGraph& a, const AmrGraph& b,
                            const std::vector<std::optional<NodeIndex>>& mapping);

/// Best hill-climbed alignment of `a` into `b` over `restarts` starts: a
/// greedy same-concept seeding first, then uniformly random injections.
/// Each climb takes the best single-node reassignment or pairwise swap until
/// no move improves; ties go to the lowest node index.
AlignmentState hill_climb(const AmrGraph& a, const AmrGraph& b, const SmatchOptions& options = {});

/// F1 over matched triples, 2m / (|T(a)| + |T(b)|), with m the larger of the
/// two directional hill-climbing results so the score is symmetric.
SimilarityScore smatch(const AmrGraph& a, const AmrGraph& b, const SmatchOptions& options = {});

}  // namespace rematch
