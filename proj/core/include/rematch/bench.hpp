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
#include <utility>
#include <vector>

#include "rematch/corpus.hpp"
#include "rematch/metric.hpp"
#include "rematch/search_space.hpp"

namespace rematch {

struct BenchRecord {
  std::string id;
  double n = 0.0;  // mean graph_size of the two graphs
  BigInt search_space;
  std::uint64_t runtime_ns = 0;
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

struct BenchOptions {
  std::size_t pairs = 1000;
  std::vector<MetricKind> metrics{MetricKind::Rematch, MetricKind::Smatch};
  MetricOptions metric_options;
  std::uint64_t seed = 42;
  // Each pair is timed `repeats` times and the fastest run kept.
  unsigned repeats = 1;
  double fit_min_n = 31.622776601683793;  // 10^1.5
};

struct MetricBench {
  MetricKind metric;
  std::vector<BenchRecord> records;
  ScalingFit fit;
};

class InsufficientCorpus : public std::runtime_error {
 public:
  InsufficientCorpus() : std::runtime_error("InsufficientCorpus: need at least two graphs") {}
};

/// `count` distinct unordered index pairs drawn uniformly from C(n, 2),
/// returned in lexicographic order. Fewer if C(n, 2) < count.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::size_t count,
                                                              std::uint64_t seed);

/// Least-squares fit of log10(runtime) on log10(N) over records with N > min_n.
ScalingFit fit_loglog(std::span<const BenchRecord> records, double min_n);

/// Runs single-threaded so timings are not disturbed by other workers.
std::vector<MetricBench> bench(const std::vector<CorpusEntry>& corpus, const BenchOptions& options);

/// `id,N,search_space,runtime_ns`; ids are `<metric>:<idA>:<idB>`.
std::string bench_csv(const std::vector<MetricBench>& results);

}  // namespace rematch
