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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rematch/amr_graph.hpp"
#include "rematch/corpus.hpp"

namespace rematch {

// ---------------------------------------------------------------------------
// Rewired benchmark pairs.
//
// A rewired graph G' is produced from G by repeatedly exchanging the targets
// of two relations or the sources of two attributes. Node set, per-node in-
// and out-degree and every label multiset are preserved; G' must remain
// acyclic, weakly connected and free of multiedges. A pair is scored
//
//     gold = (|E| - |E'|) / |E|
//
// with |E| = relations + attributes of G and |E'| the number of edges of G
// that no longer exist in G' (counted after the fact, so a later swap that
// undoes an earlier one lowers |E'| again).
// ---------------------------------------------------------------------------

enum class RejectReason : std::uint8_t {
  SameEdge,      // both indices name the same edge
  NoOp,          // the exchange leaves the graph unchanged
  SelfLoop,
  MultiEdge,     // includes duplicate attribute triples
  Cycle,
  Disconnected,
};

std::string_view to_string(RejectReason reason);

struct Rejected {
  RejectReason reason;
};

using SwapOutcome = std::variant<AmrGraph, Rejected>;

/// Exchanges the targets of relations `first` and `second`.
SwapOutcome swap_relations(const AmrGraph& g, std::size_t first, std::size_t second);

/// Exchanges the sources of attributes `first` and `second`; each label keeps
/// its constant.
SwapOutcome swap_attributes(const AmrGraph& g, std::size_t first, std::size_t second);

/// Edges of `original` absent from `rewired`, matching nodes by variable name.
std::size_t swapped_edge_count(const AmrGraph& original, const AmrGraph& rewired);

double gold_similarity(std::size_t total_edges, std::size_t swapped_edges);

struct RewiredPair {
  std::string id;
  AmrGraph original;
  AmrGraph rewired;
  std::size_t total_edges = 0;
  std::size_t swapped_edges = 0;
  double gold = 1.0;
  double level = 0.0;       // requested swap fraction; not serialized
  bool infeasible = false;  // target not reached within max_attempts; not serialized
};

/// Default swap fractions 0, 1/8, ..., 1.
std::vector<double> default_levels();

struct SpectrumConfig {
  std::vector<double> levels = default_levels();
  // Attempts without progress before a level is given up; 100 * |E| if unset.
  std::optional<std::size_t> max_attempts;
  std::uint64_t seed = 42;
};

class SpectrumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One pair per level, ids `<id>#<level index>`. Each level starts from the
/// original graph and keeps sampling swaps (relation pairs vs attribute pairs
/// weighted by how many of each exist) until ceil(level * |E|) edges differ,
/// or max_attempts consecutive attempts fail to exceed the highest count seen so far, in which
/// case the pair is emitted with what was reached and flagged infeasible.
std::vector<RewiredPair> rewire_spectrum(const AmrGraph& g, const SpectrumConfig& config,
                                         std::string_view id = "g");

struct SplitFractions {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct SplitCounts {
  std::size_t train = 0;
  std::size_t dev = 0;
  std::size_t test = 0;
};

/// train = floor(train * n), dev = floor(dev * n), test takes the rest.
SplitCounts split_counts(std::size_t n, const SplitFractions& fractions);

struct Dataset {
  std::vector<RewiredPair> train;
  std::vector<RewiredPair> dev;
  std::vector<RewiredPair> test;
  std::vector<std::string> train_sources;
  std::vector<std::string> dev_sources;
  std::vector<std::string> test_sources;
  std::vector<std::string> skipped;  // sources with fewer than two edges
};

class EmptyCorpusError : public std::runtime_error {
 public:
  EmptyCorpusError() : std::runtime_error("EmptyCorpus: no entries to build a dataset from") {}
};

/// Shuffles entries with `config.seed`, splits them, then rewires each entry
/// with seed `config.seed ^ entry_index`. Output does not depend on `jobs`.
Dataset build_dataset(const std::vector<CorpusEntry>& corpus, const SpectrumConfig& config,
                      const SplitFractions& fractions = {}, unsigned jobs = 1);

/// `{"id","gold","total_edges","swapped_edges","original","rewired"}` on one line.
std::string to_jsonl(const RewiredPair& pair);
RewiredPair parse_rewired_pair(std::string_view line);

/// Reads a JSON-lines dataset. Errors name the 1-based line.
std::vector<RewiredPair> read_dataset(const std::filesystem::path& path);

/// Writes train.jsonl, dev.jsonl, test.jsonl and stats.json into `dir`.
void write_dataset(const Dataset& dataset, const std::filesystem::path& dir);

}  // namespace rematch
