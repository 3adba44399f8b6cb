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

#include "rematch/rare.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "parallel.hpp"
#include "rematch/penman.hpp"
#include "rematch/random.hpp"

namespace rematch {

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::SameEdge: return "same-edge";
    case RejectReason::NoOp: return "no-op";
    case RejectReason::SelfLoop: return "self-loop";
    case RejectReason::MultiEdge: return "multiedge";
    case RejectReason::Cycle: return "cycle";
    case RejectReason::Disconnected: return "connectivity";
  }
  return "unknown";
}

namespace {

RejectReason reason_for(GraphViolation v) {
  switch (v) {
    case GraphViolation::SelfLoop: return RejectReason::SelfLoop;
    case GraphViolation::MultiEdge:
    case GraphViolation::DuplicateAttribute: return RejectReason::MultiEdge;
    case GraphViolation::Cycle: return RejectReason::Cycle;
    case GraphViolation::Disconnected: return RejectReason::Disconnected;
    default: return RejectReason::NoOp;
  }
}

SwapOutcome finish(const AmrGraph& g, std::vector<Relation> relations,
                   std::vector<Attribute> attributes) {
  if (auto v = find_violation(g.root(), g.instances(), relations, attributes))
    return Rejected{reason_for(*v)};
  return AmrGraph(g.root(), g.instances(), std::move(relations), std::move(attributes));
}

}  // namespace

SwapOutcome swap_relations(const AmrGraph& g, std::size_t first, std::size_t second) {
  const auto& rels = g.relations();
  if (first >= rels.size() || second >= rels.size())
    throw std::out_of_range("relation index out of range");
  if (first == second) return Rejected{RejectReason::SameEdge};
  const Relation& e1 = rels[first];
  const Relation& e2 = rels[second];
  if (e1.target == e2.target) return Rejected{RejectReason::NoOp};
  if (e1.source == e2.target || e2.source == e1.target) return Rejected{RejectReason::SelfLoop};

  std::vector<Relation> relations = rels;
  relations[first].target = e2.target;
  relations[second].target = e1.target;
  return finish(g, std::move(relations), g.attributes());
}

SwapOutcome swap_attributes(const AmrGraph& g, std::size_t first, std::size_t second) {
  const auto& attrs = g.attributes();
  if (first >= attrs.size() || second >= attrs.size())
    throw std::out_of_range("attribute index out of range");
  if (first == second) return Rejected{RejectReason::SameEdge};
  const Attribute& a1 = attrs[first];
  const Attribute& a2 = attrs[second];
  if (a1.source == a2.source || (a1.label == a2.label && a1.value == a2.value))
    return Rejected{RejectReason::NoOp};

  std::vector<Attribute> attributes = attrs;
  attributes[first].source = a2.source;
  attributes[second].source = a1.source;
  return finish(g, g.relations(), std::move(attributes));
}

namespace {

std::vector<std::string> edge_keys(const AmrGraph& g) {
  std::vector<std::string> keys;
  keys.reserve(g.relations().size() + g.attributes().size());
  for (const auto& r : g.relations())
    keys.push_back("R\x1f" + g.variable_of(r.source) + '\x1f' + r.role + '\x1f' +
                   g.variable_of(r.target));
  for (const auto& a : g.attributes())
    keys.push_back("A\x1f" + g.variable_of(a.source) + '\x1f' + a.label + '\x1f' +
                   static_cast<char>('0' + static_cast<int>(a.value.kind)) + a.value.lexical);
  return keys;
}

}  // namespace

std::size_t swapped_edge_count(const AmrGraph& original, const AmrGraph& rewired) {
  auto after = edge_keys(rewired);
  std::unordered_set<std::string> present(after.begin(), after.end());
  std::size_t missing = 0;
  for (const auto& key : edge_keys(original))
    if (!present.contains(key)) ++missing;
  return missing;
}

double gold_similarity(std::size_t total_edges, std::size_t swapped_edges) {
  if (total_edges == 0) return 1.0;
  return static_cast<double>(total_edges - swapped_edges) / static_cast<double>(total_edges);
}

std::vector<double> default_levels() {
  std::vector<double> levels;
  for (int i = 0; i <= 8; ++i) levels.push_back(i / 8.0);
  return levels;
}

std::vector<RewiredPair> rewire_spectrum(const AmrGraph& g, const SpectrumConfig& config,
                                         std::string_view id) {
  if (!std::is_sorted(config.levels.begin(), config.levels.end()))
    throw SpectrumError("spectrum levels must be sorted ascending");
  for (double f : config.levels)
    if (!(f >= 0.0 && f <= 1.0)) throw SpectrumError("spectrum levels must lie in [0, 1]");

  const std::size_t relations = g.relations().size();
  const std::size_t attributes = g.attributes().size();
  const std::size_t total = relations + attributes;
  if (total < 2) throw SpectrumError("graph needs at least two edges to rewire");

  const std::uint64_t relation_pairs = relations * (relations - (relations > 0 ? 1 : 0)) / 2;
  const std::uint64_t attribute_pairs = attributes * (attributes - (attributes > 0 ? 1 : 0)) / 2;
  const std::size_t max_attempts = config.max_attempts.value_or(100 * total);

  Rng rng(config.seed);
  std::vector<RewiredPair> out;
  for (std::size_t level_index = 0; level_index < config.levels.size(); ++level_index) {
    const double level = config.levels[level_index];
    const auto target = static_cast<std::size_t>(std::ceil(level * static_cast<double>(total) - 1e-9));

    AmrGraph current = g;
    std::size_t swapped = 0;
    std::size_t best = 0;  // high-water mark of swapped; progress means beating it
    std::size_t failures = 0;
    bool infeasible = false;
    while (swapped < target) {
      if (failures >= max_attempts || relation_pairs + attribute_pairs == 0) {
        infeasible = true;
        break;
      }
      const bool relation_swap = rng.below(relation_pairs + attribute_pairs) < relation_pairs;
      const std::size_t count = relation_swap ? relations : attributes;
      std::size_t first = rng.below(count);
      std::size_t second = rng.below(count - 1);
      if (second >= first) ++second;

      SwapOutcome outcome = relation_swap ? swap_relations(current, first, second)
                                          : swap_attributes(current, first, second);
      auto* next = std::get_if<AmrGraph>(&outcome);
      if (!next) {
        ++failures;
        continue;
      }
      std::size_t now = swapped_edge_count(g, *next);
      failures = now > best ? 0 : failures + 1;
      best = std::max(best, now);
      swapped = now;
      current = std::move(*next);
    }

    RewiredPair pair{std::string(id) + "#" + std::to_string(level_index), g, std::move(current),
                     total, swapped, gold_similarity(total, swapped), level, infeasible};
    out.push_back(std::move(pair));
  }
  return out;
}

SplitCounts split_counts(std::size_t n, const SplitFractions& fractions) {
  const double sum = fractions.train + fractions.dev + fractions.test;
  if (fractions.train < 0 || fractions.dev < 0 || fractions.test < 0 || std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("split fractions must be non-negative and sum to 1");
  SplitCounts c;
  c.train = static_cast<std::size_t>(std::floor(fractions.train * static_cast<double>(n) + 1e-9));
  c.dev = static_cast<std::size_t>(std::floor(fractions.dev * static_cast<double>(n) + 1e-9));
  c.dev = std::min(c.dev, n - c.train);
  c.test = n - c.train - c.dev;
  return c;
}

Dataset build_dataset(const std::vector<CorpusEntry>& corpus, const SpectrumConfig& config,
                      const SplitFractions& fractions, unsigned jobs) {
  if (corpus.empty()) throw EmptyCorpusError();
  const SplitCounts counts = split_counts(corpus.size(), fractions);

  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(config.seed);
  rng.shuffle(order);

  std::vector<std::vector<RewiredPair>> per_entry(corpus.size());
  std::vector<char> skipped(corpus.size(), 0);
  detail::parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    const CorpusEntry& entry = corpus[i];
    if (entry.graph.relations().size() + entry.graph.attributes().size() < 2) {
      skipped[i] = 1;
      return;
    }
    SpectrumConfig own = config;
    own.seed = config.seed ^ static_cast<std::uint64_t>(i);
    per_entry[i] = rewire_spectrum(entry.graph, own, entry.id);
  });

  Dataset ds;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    auto& pairs = k < counts.train ? ds.train : k < counts.train + counts.dev ? ds.dev : ds.test;
    auto& sources = k < counts.train               ? ds.train_sources
                    : k < counts.train + counts.dev ? ds.dev_sources
                                                    : ds.test_sources;
    sources.push_back(corpus[i].id);
    if (skipped[i]) ds.skipped.push_back(corpus[i].id);
    for (auto& p : per_entry[i]) pairs.push_back(std::move(p));
  }
  return ds;
}

std::string to_jsonl(const RewiredPair& pair) {
  nlohmann::ordered_json j;
  j["id"] = pair.id;
  j["gold"] = pair.gold;
  j["total_edges"] = pair.total_edges;
  j["swapped_edges"] = pair.swapped_edges;
  j["original"] = serialize_penman(pair.original, PenmanLayout::SingleLine);
  j["rewired"] = serialize_penman(pair.rewired, PenmanLayout::SingleLine);
  return j.dump();
}

RewiredPair parse_rewired_pair(std::string_view line) {
  auto j = nlohmann::json::parse(line);
  AmrGraph original = parse_penman(j.at("original").get<std::string>());
  AmrGraph rewired = parse_penman(j.at("rewired").get<std::string>());
  RewiredPair pair{j.at("id").get<std::string>(), std::move(original), std::move(rewired),
                   j.at("total_edges").get<std::size_t>(), j.at("swapped_edges").get<std::size_t>(),
                   j.at("gold").get<double>(), 0.0, false};
  pair.level = pair.total_edges == 0 ? 0.0
                                     : static_cast<double>(pair.swapped_edges) /
                                           static_cast<double>(pair.total_edges);
  return pair;
}

std::vector<RewiredPair> read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path.string());
  std::vector<RewiredPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      pairs.push_back(parse_rewired_pair(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ": line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return pairs;
}

void write_dataset(const Dataset& dataset, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::vector<RewiredPair>& pairs) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    for (const auto& p : pairs) out << to_jsonl(p) << '\n';
  };
  write("train.jsonl", dataset.train);
  write("dev.jsonl", dataset.dev);
  write("test.jsonl", dataset.test);

  nlohmann::ordered_json stats;
  std::vector<std::string> infeasible;
  for (const auto* split : {&dataset.train, &dataset.dev, &dataset.test})
    for (const auto& p : *split)
      if (p.infeasible) infeasible.push_back(p.id);
  stats["sources"] = {{"train", dataset.train_sources.size()},
                      {"dev", dataset.dev_sources.size()},
                      {"test", dataset.test_sources.size()}};
  stats["pairs"] = {{"train", dataset.train.size()},
                    {"dev", dataset.dev.size()},
                    {"test", dataset.test.size()}};
  stats["skipped_sources"] = dataset.skipped;
  stats["infeasible_pairs"] = infeasible;
  std::ofstream out(dir / "stats.json", std::ios::binary | std::ios::trunc);
  out << stats.dump(2) << '\n';
}

}  // namespace rematch
