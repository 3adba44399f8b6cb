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

#include "rematch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>

#include "rematch/random.hpp"

namespace rematch {

std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::size_t count,
                                                              std::uint64_t seed) {
  if (n < 2) throw InsufficientCorpus();
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  count = static_cast<std::size_t>(std::min<std::uint64_t>(count, total));

  // Floyd's algorithm: uniform subset of size `count` without replacement.
  Rng rng(seed);
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total - count; j < total; ++j) {
    std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }

  // Pair index k enumerates (i, j), i < j, row by row.
  auto row_start = [n](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(count);
  for (std::uint64_t k : chosen) {
    std::uint64_t lo = 0, hi = n - 2;
    while (lo < hi) {
      std::uint64_t mid = (lo + hi + 1) / 2;
      if (row_start(mid) <= k) lo = mid; else hi = mid - 1;
    }
    out.emplace_back(lo, lo + 1 + (k - row_start(lo)));
  }
  return out;
}

ScalingFit fit_loglog(std::span<const BenchRecord> records, double min_n) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  ScalingFit fit;
  for (const auto& r : records) {
    if (!(r.n > min_n)) continue;
    const double x = std::log10(r.n);
    const double y = std::log10(std::max<double>(1.0, static_cast<double>(r.runtime_ns)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++fit.points;
  }
  const double k = static_cast<double>(fit.points);
  const double denom = k * sxx - sx * sx;
  if (fit.points < 2 || denom <= 0) {
    fit.slope = fit.intercept = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  return fit;
}

std::vector<MetricBench> bench(const std::vector<CorpusEntry>& corpus, const BenchOptions& options) {
  const auto pairs = sample_pairs(corpus.size(), options.pairs, options.seed);
  std::vector<MetricBench> results;
  for (MetricKind metric : options.metrics) {
    MetricBench mb{metric, {}, {}};
    mb.records.reserve(pairs.size());
    for (auto [i, j] : pairs) {
      const AmrGraph& a = corpus[i].graph;
      const AmrGraph& b = corpus[j].graph;
      std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
      for (unsigned rep = 0; rep < std::max(1u, options.repeats); ++rep) {
        auto start = std::chrono::steady_clock::now();
        auto s = score(metric, a, b, options.metric_options);
        auto stop = std::chrono::steady_clock::now();
        // keep the call observable so it cannot be elided
        if (s.denominator == std::numeric_limits<std::uint64_t>::max()) best = 0;
        best = std::min<std::uint64_t>(
            best, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      }
      BenchRecord rec;
      rec.id = std::string(to_string(metric)) + ":" + corpus[i].id + ":" + corpus[j].id;
      rec.n = (static_cast<double>(graph_size(a)) + static_cast<double>(graph_size(b))) / 2.0;
      rec.search_space = search_space(metric, a, b, options.metric_options);
      rec.runtime_ns = best;
      mb.records.push_back(std::move(rec));
    }
    mb.fit = fit_loglog(mb.records, options.fit_min_n);
    results.push_back(std::move(mb));
  }
  return results;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

std::string bench_csv(const std::vector<MetricBench>& results) {
  std::string out = "id,N,search_space,runtime_ns\n";
  for (const auto& mb : results)
    for (const auto& r : mb.records)
      out += csv_field(r.id) + "," + format_double(r.n) + "," + r.search_space.str() + "," +
             std::to_string(r.runtime_ns) + "\n";
  return out;
}

}  // namespace rematch
