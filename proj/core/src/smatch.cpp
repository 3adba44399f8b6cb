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

#include "rematch/smatch.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rematch/random.hpp"

namespace rematch {

std::size_t triple_count(const AmrGraph& g) noexcept {
  return g.node_count() + 1 + g.attributes().size() + g.relations().size();
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::uint64_t pair_key(NodeIndex s, NodeIndex t) {
  return (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint64_t>(t);
}

std::string attribute_key(const Attribute& a) {
  return a.label + '\x1f' + static_cast<char>('0' + static_cast<int>(a.value.kind)) + a.value.lexical;
}

// Precomputed scoring tables for aligning `a` into `b`.
class AlignmentProblem {
 public:
  AlignmentProblem(const AmrGraph& a, const AmrGraph& b) : a_(a), b_(b), n1_(a.node_count()), n2_(b.node_count()) {
    std::unordered_map<std::string, std::size_t> roles;
    auto role_id = [&](const std::string& r) { return roles.emplace(r, roles.size()).first->second; };

    b_edges_.reserve(b.relations().size());
    for (const auto& r : b.relations()) b_edges_.emplace(pair_key(r.source, r.target), role_id(r.role));
    a_roles_.reserve(a.relations().size());
    for (const auto& r : a.relations()) a_roles_.push_back(role_id(r.role));

    node_score_.assign(n1_ * n2_, 0);
    std::unordered_map<std::string, std::vector<NodeIndex>> concept_nodes;
    for (NodeIndex j = 0; j < n2_; ++j) concept_nodes[b.concept_of(j)].push_back(j);
    for (NodeIndex i = 0; i < n1_; ++i) {
      auto it = concept_nodes.find(a.concept_of(i));
      if (it != concept_nodes.end())
        for (NodeIndex j : it->second) ++node_score_[i * n2_ + j];
    }
    // The top triple carries the root concept, so it needs matching concepts too.
    if (a.concept_of(a.root()) == b.concept_of(b.root())) ++node_score_[a.root() * n2_ + b.root()];
    std::unordered_map<std::string, std::vector<NodeIndex>> attribute_nodes;
    for (const auto& attr : b.attributes()) attribute_nodes[attribute_key(attr)].push_back(attr.source);
    for (const auto& attr : a.attributes()) {
      auto it = attribute_nodes.find(attribute_key(attr));
      if (it != attribute_nodes.end())
        for (NodeIndex j : it->second) ++node_score_[attr.source * n2_ + j];
    }

    // Candidates: nodes of b that can contribute at least one matched triple.
    std::unordered_map<std::size_t, std::vector<NodeIndex>> out_by_role;
    std::unordered_map<std::size_t, std::vector<NodeIndex>> in_by_role;
    for (const auto& r : b.relations()) {
      std::size_t id = roles.at(r.role);
      out_by_role[id].push_back(r.source);
      in_by_role[id].push_back(r.target);
    }
    candidates_.resize(n1_);
    std::vector<char> mark(n2_, 0);
    for (NodeIndex i = 0; i < n1_; ++i) {
      std::fill(mark.begin(), mark.end(), 0);
      for (NodeIndex j = 0; j < n2_; ++j)
        if (node_score_[i * n2_ + j] > 0) mark[j] = 1;
      for (std::size_t r : a.outgoing(i))
        if (auto it = out_by_role.find(a_roles_[r]); it != out_by_role.end())
          for (NodeIndex j : it->second) mark[j] = 1;
      for (std::size_t r : a.incoming(i))
        if (auto it = in_by_role.find(a_roles_[r]); it != in_by_role.end())
          for (NodeIndex j : it->second) mark[j] = 1;
      for (NodeIndex j = 0; j < n2_; ++j)
        if (mark[j]) candidates_[i].push_back(j);
    }
  }

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  const std::vector<NodeIndex>& candidates(NodeIndex i) const { return candidates_[i]; }

  int node_score(NodeIndex i, std::size_t j) const {
    return j == kNone ? 0 : node_score_[i * n2_ + j];
  }

  int relation_match(std::size_t r, std::size_t src, std::size_t tgt) const {
    if (src == kNone || tgt == kNone) return 0;
    auto it = b_edges_.find(pair_key(src, tgt));
    return it != b_edges_.end() && it->second == a_roles_[r] ? 1 : 0;
  }

  std::size_t total(const std::vector<std::size_t>& map) const {
    std::size_t score = 0;
    for (NodeIndex i = 0; i < n1_; ++i) score += node_score(i, map[i]);
    for (std::size_t r = 0; r < a_.relations().size(); ++r) {
      const Relation& rel = a_.relations()[r];
      score += relation_match(r, map[rel.source], map[rel.target]);
    }
    return score;
  }

  // Gain from moving node i to `to` (kNone or unused in b).
  int move_gain(const std::vector<std::size_t>& map, NodeIndex i, std::size_t to) const {
    const std::size_t from = map[i];
    int gain = node_score(i, to) - node_score(i, from);
    for (std::size_t r : a_.outgoing(i)) {
      std::size_t t = map[a_.relations()[r].target];
      gain += relation_match(r, to, t) - relation_match(r, from, t);
    }
    for (std::size_t r : a_.incoming(i)) {
      std::size_t s = map[a_.relations()[r].source];
      gain += relation_match(r, s, to) - relation_match(r, s, from);
    }
    return gain;
  }

  // Gain from exchanging the images of i and k.
  int swap_gain(const std::vector<std::size_t>& map, NodeIndex i, NodeIndex k) const {
    const std::size_t u = map[i];
    const std::size_t v = map[k];
    auto after = [&](NodeIndex x) { return x == i ? v : x == k ? u : map[x]; };
    int gain = node_score(i, v) + node_score(k, u) - node_score(i, u) - node_score(k, v);
    auto edge_delta = [&](std::size_t r) {
      const Relation& rel = a_.relations()[r];
      return relation_match(r, after(rel.source), after(rel.target)) -
             relation_match(r, map[rel.source], map[rel.target]);
    };
    for (std::size_t r : a_.outgoing(i)) gain += edge_delta(r);
    for (std::size_t r : a_.incoming(i)) gain += edge_delta(r);
    for (std::size_t r : a_.outgoing(k))
      if (a_.relations()[r].target != i) gain += edge_delta(r);
    for (std::size_t r : a_.incoming(k))
      if (a_.relations()[r].source != i) gain += edge_delta(r);
    return gain;
  }

 private:
  const AmrGraph& a_;
  const AmrGraph& b_;
  std::size_t n1_;
  std::size_t n2_;
  std::vector<int> node_score_;
  std::vector<std::size_t> a_roles_;
  std::unordered_map<std::uint64_t, std::size_t> b_edges_;
  std::vector<std::vector<NodeIndex>> candidates_;
};

std::vector<std::size_t> greedy_start(const AmrGraph& a, const AmrGraph& b) {
  std::vector<std::size_t> map(a.node_count(), kNone);
  std::vector<bool> used(b.node_count(), false);
  for (NodeIndex i = 0; i < a.node_count(); ++i) {
    for (NodeIndex j = 0; j < b.node_count(); ++j) {
      if (!used[j] && a.concept_of(i) == b.concept_of(j)) {
        map[i] = j;
        used[j] = true;
        break;
      }
    }
  }
  return map;
}

std::vector<std::size_t> random_start(std::size_t n1, std::size_t n2, Rng& rng) {
  std::vector<std::size_t> images(n2);
  for (std::size_t j = 0; j < n2; ++j) images[j] = j;
  rng.shuffle(images);
  std::vector<std::size_t> map(n1, kNone);
  for (std::size_t i = 0; i < n1 && i < n2; ++i) map[i] = images[i];
  // With n1 > n2 the unmapped nodes should be a random subset, not a suffix.
  if (n1 > n2) rng.shuffle(map);
  return map;
}

std::size_t climb(const AlignmentProblem& p, std::vector<std::size_t>& map) {
  std::vector<NodeIndex> owner(p.n2(), kNone);
  for (NodeIndex i = 0; i < p.n1(); ++i)
    if (map[i] != kNone) owner[map[i]] = i;

  while (true) {
    int best = 0;
    NodeIndex best_i = kNone;
    std::size_t best_target = kNone;
    bool best_is_swap = false;

    for (NodeIndex i = 0; i < p.n1(); ++i) {
      for (NodeIndex j : p.candidates(i)) {
        if (owner[j] != kNone) continue;
        int gain = p.move_gain(map, i, j);
        if (gain > best) {
          best = gain;
          best_i = i;
          best_target = j;
          best_is_swap = false;
        }
      }
    }
    for (NodeIndex i = 0; i < p.n1(); ++i) {
      if (map[i] == kNone) continue;
      for (NodeIndex k = i + 1; k < p.n1(); ++k) {
        if (map[k] == kNone) continue;
        int gain = p.swap_gain(map, i, k);
        if (gain > best) {
          best = gain;
          best_i = i;
          best_target = k;
          best_is_swap = true;
        }
      }
    }

    if (best <= 0) break;
    if (best_is_swap) {
      std::swap(map[best_i], map[best_target]);
      owner[map[best_i]] = best_i;
      owner[map[best_target]] = best_target;
    } else {
      if (map[best_i] != kNone) owner[map[best_i]] = kNone;
      map[best_i] = best_target;
      owner[best_target] = best_i;
    }
  }
  return p.total(map);
}

}  // namespace

std::size_t matched_triples(const AmrGraph& a, const AmrGraph& b,
                            const std::vector<std::optional<NodeIndex>>& mapping) {
  if (mapping.size() != a.node_count()) throw std::invalid_argument("mapping size mismatch");
  std::vector<std::size_t> map(a.node_count(), kNone);
  std::vector<bool> used(b.node_count(), false);
  for (NodeIndex i = 0; i < a.node_count(); ++i) {
    if (!mapping[i]) continue;
    NodeIndex j = *mapping[i];
    if (j >= b.node_count() || used[j]) throw std::invalid_argument("mapping is not an injection");
    used[j] = true;
    map[i] = j;
  }
  return AlignmentProblem(a, b).total(map);
}

AlignmentState hill_climb(const AmrGraph& a, const AmrGraph& b, const SmatchOptions& options) {
  AlignmentProblem problem(a, b);
  Rng rng(options.seed);
  const unsigned restarts = std::max(1u, options.restarts);

  std::vector<std::size_t> best_map;
  std::size_t best = 0;
  for (unsigned r = 0; r < restarts; ++r) {
    std::vector<std::size_t> map =
        r == 0 ? greedy_start(a, b) : random_start(a.node_count(), b.node_count(), rng);
    std::size_t score = climb(problem, map);
    if (r == 0 || score > best) {
      best = score;
      best_map = std::move(map);
    }
  }

  AlignmentState state;
  state.matched = best;
  state.mapping.resize(a.node_count());
  for (NodeIndex i = 0; i < a.node_count(); ++i)
    if (best_map[i] != kNone) state.mapping[i] = best_map[i];
  return state;
}

SimilarityScore smatch(const AmrGraph& a, const AmrGraph& b, const SmatchOptions& options) {
  const std::size_t forward = hill_climb(a, b, options).matched;
  const std::size_t backward = hill_climb(b, a, options).matched;
  SimilarityScore s;
  s.metric = "smatch";
  s.matched = std::max(forward, backward);
  s.size_a = triple_count(a);
  s.size_b = triple_count(b);
  s.numerator = 2 * s.matched;
  s.denominator = s.size_a + s.size_b;
  return s;
}

}  // namespace rematch
