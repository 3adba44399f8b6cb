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

#include "rematch/amr_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

namespace rematch {

std::string_view to_string(GraphViolation v) {
  switch (v) {
    case GraphViolation::EmptyGraph: return "empty graph";
    case GraphViolation::RootMissing: return "root is not an instance";
    case GraphViolation::DanglingEndpoint: return "edge endpoint is not an instance";
    case GraphViolation::DuplicateVariable: return "duplicate variable";
    case GraphViolation::SelfLoop: return "self-loop";
    case GraphViolation::MultiEdge: return "multiedge";
    case GraphViolation::DuplicateAttribute: return "duplicate attribute";
    case GraphViolation::Cycle: return "cycle";
    case GraphViolation::Disconnected: return "disconnected graph";
  }
  return "unknown violation";
}

GraphError::GraphError(GraphViolation kind)
    : std::runtime_error("invalid AMR graph: " + std::string(to_string(kind))), kind_(kind) {}

namespace {

NodeIndex find_root(std::vector<NodeIndex>& parent, NodeIndex x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool is_acyclic(std::size_t n, std::span<const Relation> relations) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<NodeIndex>> succ(n);
  for (const auto& r : relations) {
    ++indegree[r.target];
    succ[r.source].push_back(r.target);
  }
  std::vector<NodeIndex> stack;
  for (NodeIndex i = 0; i < n; ++i)
    if (indegree[i] == 0) stack.push_back(i);
  std::size_t seen = 0;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    ++seen;
    for (NodeIndex w : succ[v])
      if (--indegree[w] == 0) stack.push_back(w);
  }
  return seen == n;
}

bool is_weakly_connected(std::size_t n, std::span<const Relation> relations) {
  std::vector<NodeIndex> parent(n);
  std::iota(parent.begin(), parent.end(), NodeIndex{0});
  std::size_t components = n;
  for (const auto& r : relations) {
    NodeIndex a = find_root(parent, r.source);
    NodeIndex b = find_root(parent, r.target);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

}  // namespace

std::optional<GraphViolation> find_violation(NodeIndex root, std::span<const Instance> instances,
                                             std::span<const Relation> relations,
                                             std::span<const Attribute> attributes) {
  const std::size_t n = instances.size();
  if (n == 0) return GraphViolation::EmptyGraph;
  if (root >= n) return GraphViolation::RootMissing;
  for (const auto& r : relations)
    if (r.source >= n || r.target >= n) return GraphViolation::DanglingEndpoint;
  for (const auto& a : attributes)
    if (a.source >= n) return GraphViolation::DanglingEndpoint;

  std::unordered_set<std::string_view> variables;
  for (const auto& inst : instances)
    if (!variables.insert(inst.variable).second) return GraphViolation::DuplicateVariable;

  std::set<std::pair<NodeIndex, NodeIndex>> endpoints;
  for (const auto& r : relations) {
    if (r.source == r.target) return GraphViolation::SelfLoop;
    if (!endpoints.emplace(r.source, r.target).second) return GraphViolation::MultiEdge;
  }

  std::set<const Attribute*, decltype([](const Attribute* x, const Attribute* y) { return *x < *y; })>
      attrs;
  for (const auto& a : attributes)
    if (!attrs.insert(&a).second) return GraphViolation::DuplicateAttribute;

  if (!is_acyclic(n, relations)) return GraphViolation::Cycle;
  if (!is_weakly_connected(n, relations)) return GraphViolation::Disconnected;
  return std::nullopt;
}

AmrGraph::AmrGraph(NodeIndex root, std::vector<Instance> instances, std::vector<Relation> relations,
                   std::vector<Attribute> attributes)
    : root_(root),
      instances_(std::move(instances)),
      relations_(std::move(relations)),
      attributes_(std::move(attributes)) {
  if (auto v = find_violation(root_, instances_, relations_, attributes_)) throw GraphError(*v);
  const std::size_t n = instances_.size();
  out_.resize(n);
  in_.resize(n);
  attrs_.resize(n);
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    out_[relations_[i].source].push_back(i);
    in_[relations_[i].target].push_back(i);
  }
  for (std::size_t i = 0; i < attributes_.size(); ++i) attrs_[attributes_[i].source].push_back(i);
}

std::optional<NodeIndex> AmrGraph::find(std::string_view variable) const {
  for (NodeIndex i = 0; i < instances_.size(); ++i)
    if (instances_[i].variable == variable) return i;
  return std::nullopt;
}

std::size_t graph_size(const AmrGraph& g) noexcept {
  return g.instances().size() + g.attributes().size() + g.relations().size();
}

}  // namespace rematch
