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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rematch {

using NodeIndex = std::size_t;

enum class ConstantKind : std::uint8_t { String, Symbol, Number };

/// Value at the far end of an attribute edge. Equality is lexical: `3` and
/// `3.0` are different constants.
struct Constant {
  ConstantKind kind = ConstantKind::Symbol;
  std::string lexical;

  static Constant string(std::string text) { return {ConstantKind::String, std::move(text)}; }
  static Constant symbol(std::string text) { return {ConstantKind::Symbol, std::move(text)}; }
  static Constant number(std::string text) { return {ConstantKind::Number, std::move(text)}; }

  friend auto operator<=>(const Constant&, const Constant&) = default;
  friend bool operator==(const Constant&, const Constant&) = default;
};

struct Instance {
  std::string variable;
  std::string label;  // concept, e.g. `cut-01` or `he`
};

struct Relation {
  NodeIndex source = 0;
  std::string role;
  NodeIndex target = 0;

  friend auto operator<=>(const Relation&, const Relation&) = default;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Attribute {
  NodeIndex source = 0;
  std::string label;
  Constant value;

  friend auto operator<=>(const Attribute&, const Attribute&) = default;
  friend bool operator==(const Attribute&, const Attribute&) = default;
};

enum class GraphViolation : std::uint8_t {
  EmptyGraph,
  RootMissing,
  DanglingEndpoint,
  DuplicateVariable,
  SelfLoop,
  MultiEdge,
  DuplicateAttribute,
  Cycle,
  Disconnected,
};

std::string_view to_string(GraphViolation v);

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(GraphViolation kind);
  GraphViolation kind() const noexcept { return kind_; }

 private:
  GraphViolation kind_;
};

/// Checks every structural invariant of an AMR graph over raw parts. Returns
/// the first violation found, in the order listed by GraphViolation.
std::optional<GraphViolation> find_violation(NodeIndex root,
                                             std::span<const Instance> instances,
                                             std::span<const Relation> relations,
                                             std::span<const Attribute> attributes);

/// Rooted, connected, acyclic labelled graph. Immutable once built; the
/// constructor throws GraphError when an invariant does not hold.
class AmrGraph {
 public:
  AmrGraph(NodeIndex root, std::vector<Instance> instances, std::vector<Relation> relations,
           std::vector<Attribute> attributes);

  NodeIndex root() const noexcept { return root_; }
  std::size_t node_count() const noexcept { return instances_.size(); }

  const std::vector<Instance>& instances() const noexcept { return instances_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::vector<Attribute>& attributes() const noexcept { return attributes_; }

  const std::string& concept_of(NodeIndex n) const { return instances_.at(n).label; }
  const std::string& variable_of(NodeIndex n) const { return instances_.at(n).variable; }
  std::optional<NodeIndex> find(std::string_view variable) const;

  // Indices into relations() / attributes().
  std::span<const std::size_t> outgoing(NodeIndex n) const { return out_.at(n); }
  std::span<const std::size_t> incoming(NodeIndex n) const { return in_.at(n); }
  std::span<const std::size_t> attributes_of(NodeIndex n) const { return attrs_.at(n); }

 private:
  NodeIndex root_;
  std::vector<Instance> instances_;
  std::vector<Relation> relations_;
  std::vector<Attribute> attributes_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> attrs_;
};

/// |instances| + |attributes| + |relations|.
std::size_t graph_size(const AmrGraph& g) noexcept;

}  // namespace rematch
