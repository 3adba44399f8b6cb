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

#include <gtest/gtest.h>

#include "rematch/amr_graph.hpp"
#include "rematch/graph_equal.hpp"
#include "rematch/penman.hpp"
#include "test_support.hpp"

namespace rematch {
namespace {

using testing::knife;
using testing::talk_negated;

GraphViolation violation_of(NodeIndex root, std::vector<Instance> inst, std::vector<Relation> rel,
                            std::vector<Attribute> attr = {}) {
  try {
    AmrGraph g(root, std::move(inst), std::move(rel), std::move(attr));
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "graph was accepted";
  return GraphViolation::EmptyGraph;
}

TEST(AmrGraph, GraphSizeCountsEveryComponent) {
  EXPECT_EQ(graph_size(knife()), 8u);
  EXPECT_EQ(graph_size(parse_penman("(a / amr-empty)")), 1u);
  AmrGraph g = talk_negated();
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g.relations().size(), 5u);
  EXPECT_EQ(g.attributes().size(), 3u);
  EXPECT_EQ(graph_size(g), 14u);
}

TEST(AmrGraph, RejectsStructuralViolations) {
  std::vector<Instance> two = {{"a", "x"}, {"b", "y"}};
  EXPECT_EQ(violation_of(0, {}, {}), GraphViolation::EmptyGraph);
  EXPECT_EQ(violation_of(2, two, {{0, "r", 1}}), GraphViolation::RootMissing);
  EXPECT_EQ(violation_of(0, two, {{0, "r", 5}}), GraphViolation::DanglingEndpoint);
  EXPECT_EQ(violation_of(0, {{"a", "x"}, {"a", "y"}}, {{0, "r", 1}}), GraphViolation::DuplicateVariable);
  EXPECT_EQ(violation_of(0, two, {{0, "r", 1}, {1, "s", 1}}), GraphViolation::SelfLoop);
  EXPECT_EQ(violation_of(0, two, {{0, "r", 1}, {0, "s", 1}}), GraphViolation::MultiEdge);
  EXPECT_EQ(violation_of(0, two, {{0, "r", 1}}, {{1, "p", Constant::symbol("-")}, {1, "p", Constant::symbol("-")}}),
            GraphViolation::DuplicateAttribute);
  EXPECT_EQ(violation_of(0, {{"a", "x"}, {"b", "y"}, {"c", "z"}}, {{0, "r", 1}, {1, "r", 2}, {2, "r", 1}}),
            GraphViolation::Cycle);
  EXPECT_EQ(violation_of(0, {{"a", "x"}, {"b", "y"}, {"c", "z"}}, {{0, "r", 1}}), GraphViolation::Disconnected);
}

TEST(AmrGraph, AdjacencyIndexesMatchEdgeLists) {
  AmrGraph g = knife();
  NodeIndex c = *g.find("c");
  EXPECT_EQ(g.outgoing(c).size(), 3u);
  EXPECT_EQ(g.incoming(c).size(), 0u);
  EXPECT_EQ(g.attributes_of(c).size(), 1u);
  EXPECT_EQ(g.incoming(*g.find("k")).size(), 1u);
  EXPECT_FALSE(g.find("zzz").has_value());
}

TEST(GraphEqual, IgnoresVariableNamesAndOrder) {
  AmrGraph a = parse_penman("(x / go-01 :ARG0 (y / boy) :ARG1 (z / girl))");
  AmrGraph b = parse_penman("(q / go-01 :ARG1 (w / girl) :ARG0 (v / boy))");
  EXPECT_TRUE(graph_equal(a, b));
}

TEST(GraphEqual, DistinguishesLabelsRolesAndRoot) {
  AmrGraph a = parse_penman("(x / go-01 :ARG0 (y / boy))");
  EXPECT_FALSE(graph_equal(a, parse_penman("(x / go-01 :ARG1 (y / boy))")));
  EXPECT_FALSE(graph_equal(a, parse_penman("(x / go-02 :ARG0 (y / boy))")));
  EXPECT_FALSE(graph_equal(a, parse_penman("(y / boy :ARG0-of (x / go-01))")));
  EXPECT_FALSE(graph_equal(a, parse_penman("(x / go-01 :ARG0 (y / boy :polarity -))")));
}

TEST(GraphEqual, HandlesSymmetricStructures) {
  // Two same-concept children distinguished only by their own children.
  AmrGraph a = parse_penman("(r / and :op1 (p / person :name (n / name :op1 \"A\")) :op2 (q / person :name (m / name :op1 \"B\")))");
  AmrGraph b = parse_penman("(r / and :op1 (p / person :name (n / name :op1 \"B\")) :op2 (q / person :name (m / name :op1 \"A\")))");
  EXPECT_FALSE(graph_equal(a, b));
  EXPECT_TRUE(graph_equal(a, a));
}

}  // namespace
}  // namespace rematch
