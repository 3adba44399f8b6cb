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

#include "rematch/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string_view>

#include "rematch/motifs.hpp"

namespace rematch {
namespace {

constexpr std::array<std::string_view, 12> kNonCoreRoles = {
    "mod", "location", "time", "manner", "purpose", "part",
    "poss", "topic", "domain", "source", "destination", "instrument"};

std::string frame_concept(std::size_t k) {
  return "verb" + std::to_string(k / 3) + "-0" + std::to_string(k % 3 + 1);
}

std::string entity_concept(std::size_t k) { return "thing" + std::to_string(k); }

struct Builder {
  std::vector<Instance> instances;
  std::vector<Relation> relations;
  std::vector<Attribute> attributes;
  std::vector<std::set<std::string>> used_roles;
  std::set<std::pair<NodeIndex, NodeIndex>> edges;

  std::size_t size() const { return instances.size() + relations.size() + attributes.size(); }
};

std::string pick_role(Builder& b, NodeIndex source, Rng& rng) {
  const bool frame = is_propbank_frame(b.instances[source].label);
  std::string role;
  for (int attempt = 0; attempt < 8; ++attempt) {
    role = frame && rng.unit() < 0.75 ? "ARG" + std::to_string(rng.below(5))
                                      : std::string(kNonCoreRoles[rng.below(kNonCoreRoles.size())]);
    if (!b.used_roles[source].contains(role)) break;
  }
  b.used_roles[source].insert(role);
  return role;
}

void add_attributes(Builder& b, NodeIndex node, Rng& rng, const SynthConfig& config) {
  if (rng.unit() >= config.attribute_probability) return;
  const int count = rng.unit() < 0.75 ? 1 : 2;
  for (int k = 0; k < count; ++k) {
    Attribute a{node, "", {}};
    switch (rng.below(5)) {
      case 0: a.label = "polarity"; a.value = Constant::symbol("-"); break;
      case 1: a.label = "op" + std::to_string(rng.below(2) + 1);
              a.value = Constant::string("Name" + std::to_string(rng.below(config.name_vocabulary)));
              break;
      case 2: a.label = "quant"; a.value = Constant::number(std::to_string(rng.below(100))); break;
      case 3: a.label = "mode";
              a.value = Constant::symbol(rng.below(2) == 0 ? "imperative" : "expressive");
              break;
      default: a.label = "value"; a.value = Constant::number(std::to_string(rng.below(1000))); break;
    }
    bool duplicate = std::any_of(b.attributes.begin(), b.attributes.end(), [&](const Attribute& x) {
      return x.source == node && x.label == a.label && x.value == a.value;
    });
    if (!duplicate) b.attributes.push_back(std::move(a));
  }
}

}  // namespace

AmrGraph synthesize_graph(std::size_t target_size, Rng& rng, const SynthConfig& config) {
  Builder b;
  auto add_node = [&] {
    NodeIndex id = b.instances.size();
    std::string label = rng.unit() < config.frame_probability
                            ? frame_concept(rng.below(config.frame_vocabulary))
                            : entity_concept(rng.below(config.entity_vocabulary));
    b.instances.push_back({"n" + std::to_string(id), std::move(label)});
    b.used_roles.emplace_back();
    add_attributes(b, id, rng, config);
    return id;
  };

  add_node();
  while (b.size() < target_size) {
    NodeIndex parent = rng.below(b.instances.size());
    NodeIndex child = add_node();
    b.relations.push_back({parent, pick_role(b, parent, rng), child});
    b.edges.emplace(parent, child);
    if (child >= 2 && rng.unit() < config.reentrancy && b.size() < target_size) {
      NodeIndex u = rng.below(child);
      NodeIndex v = u + 1 + rng.below(child - u);
      if (!b.edges.contains({u, v})) {
        b.relations.push_back({u, pick_role(b, u, rng), v});
        b.edges.emplace(u, v);
      }
    }
  }
  return AmrGraph(0, std::move(b.instances), std::move(b.relations), std::move(b.attributes));
}

std::vector<CorpusEntry> synthesize_corpus(const SynthConfig& config) {
  Rng rng(config.seed);
  std::vector<CorpusEntry> out;
  out.reserve(config.graphs);
  const double lo = std::log(static_cast<double>(std::max<std::size_t>(1, config.min_size)));
  const double hi = std::log(static_cast<double>(std::max(config.min_size, config.max_size)));
  for (std::size_t k = 0; k < config.graphs; ++k) {
    const auto size = static_cast<std::size_t>(std::lround(std::exp(lo + (hi - lo) * rng.unit())));
    std::string id = "synth-" + std::to_string(k);
    AmrGraph g = synthesize_graph(size, rng, config);
    out.push_back({id, std::nullopt, {"# ::id " + id}, std::move(g)});
  }
  return out;
}

}  // namespace rematch
