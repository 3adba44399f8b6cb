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
#include <vector>

#include "rematch/amr_graph.hpp"
#include "rematch/corpus.hpp"
#include "rematch/random.hpp"

namespace rematch {

/// Random AMR-like graphs for runs without a licensed corpus. Node 0 is the
/// root; every other node hangs off an earlier node, so the relation graph
/// is a DAG, with occasional extra edges for re-entrancy. Frames carry
/// ARG0..ARG4, other concepts carry non-core roles, and a node carries
/// 0 to 2 attributes.
struct SynthConfig {
  std::size_t graphs = 100;
  std::size_t min_size = 5;      // graph_size bounds; sizes are log-uniform
  std::size_t max_size = 1000;
  std::uint64_t seed = 42;
  std::size_t frame_vocabulary = 400;
  std::size_t entity_vocabulary = 600;
  std::size_t name_vocabulary = 300;
  double frame_probability = 0.4;
  double reentrancy = 0.08;      // chance of an extra edge per added node
  double attribute_probability = 0.15; // chance a node carries 1 (75%) or 2 attributes
};

/// A graph whose graph_size is `target_size` or slightly above (one node
/// brings its relation and attributes along).
AmrGraph synthesize_graph(std::size_t target_size, Rng& rng, const SynthConfig& config = {});

/// Entries `synth-<k>` with sizes drawn log-uniformly in [min_size, max_size].
std::vector<CorpusEntry> synthesize_corpus(const SynthConfig& config);

}  // namespace rematch
