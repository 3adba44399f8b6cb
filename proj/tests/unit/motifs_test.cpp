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

#include <set>

#include "rematch/motifs.hpp"
#include "rematch/penman.hpp"
#include "test_support.hpp"

namespace rematch {
namespace {

using testing::talk_negated;
using testing::talk_to_speak;

std::set<std::string> strings(const MotifSet& s) { return {s.begin(), s.end()}; }

template <typename T>
std::set<std::string> strings(const std::vector<T>& v) {
  std::set<std::string> out;
  for (const auto& m : v) out.insert(canonical_string(m));
  return out;
}

NodeIndex node(const AmrGraph& g, std::string_view var) { return *g.find(var); }

std::size_t relation_index(const AmrGraph& g, std::string_view role, std::string_view target_var) {
  for (std::size_t i = 0; i < g.relations().size(); ++i)
    if (g.relations()[i].role == role && g.variable_of(g.relations()[i].target) == target_var) return i;
  throw std::logic_error("no such relation");
}

TEST(Motifs, AttributeMotifsPerNode) {
  AmrGraph g = talk_negated();
  EXPECT_EQ(strings(attribute_motifs(g, node(g, "t"))), std::set<std::string>{"A(polarity,y:-)"});
  EXPECT_EQ(strings(attribute_motifs(g, node(g, "n"))), std::set<std::string>{"A(op1,s:Helen)"});
  AmrGraph f1 = testing::knife();
  EXPECT_TRUE(attribute_motifs(f1, node(f1, "a")).empty());
}

TEST(Motifs, InstanceMotifsUseFrameMap) {
  AmrGraph g = talk_negated();
  EXPECT_EQ(strings(instance_motifs(g, node(g, "t"), talk_to_speak())),
            std::set<std::string>{"I(speak,A(polarity,y:-))"});
  EXPECT_EQ(strings(instance_motifs(g, node(g, "p"), talk_to_speak())), std::set<std::string>{"I(person)"});
  EXPECT_EQ(strings(instance_motifs(g, node(g, "t"), {})), std::set<std::string>{"I(talk-01,A(polarity,y:-))"});
}

TEST(Motifs, OneInstanceMotifPerAttribute) {
  AmrGraph g = parse_penman("(x / thing :polarity - :quant 3)");
  EXPECT_EQ(strings(instance_motifs(g, 0, {})),
            (std::set<std::string>{"I(thing,A(polarity,y:-))", "I(thing,A(quant,n:3))"}));
}

TEST(Motifs, RelationMotifs) {
  AmrGraph g = talk_negated();
  EXPECT_EQ(strings(relation_motifs(g, relation_index(g, "ARG1", "p2"), talk_to_speak())),
            std::set<std::string>{"R(I(speak,A(polarity,y:-)),ARG1,I(politics))"});
  EXPECT_EQ(strings(relation_motifs(g, relation_index(g, "name", "n"), talk_to_speak())),
            std::set<std::string>{"R(I(person),name,I(name,A(op1,s:Helen)))"});

  AmrGraph product = parse_penman("(a / x :polarity - :mode imperative :ARG0 (b / y :op1 \"A\" :op2 \"B\" :op3 \"C\"))");
  EXPECT_EQ(relation_motifs(product, 0, {}).size(), 6u);
}

TEST(Motifs, TalkSet) {
  MotifSet s = motif_set(talk_negated(), talk_to_speak());
  std::set<std::string> expected = {
      "A(op1,s:Helen)", "A(op1,s:Maya)", "A(polarity,y:-)",
      "I(speak,A(polarity,y:-))", "I(person)", "I(politics)",
      "I(name,A(op1,s:Helen))", "I(name,A(op1,s:Maya))",
      "R(I(speak,A(polarity,y:-)),ARG0,I(person))",
      "R(I(speak,A(polarity,y:-)),ARG1,I(politics))",
      "R(I(speak,A(polarity,y:-)),ARG2,I(person))",
      "R(I(person),name,I(name,A(op1,s:Helen)))",
      "R(I(person),name,I(name,A(op1,s:Maya)))"};
  EXPECT_EQ(strings(s), expected);
  EXPECT_EQ(s.size(), 13u);
}

TEST(Motifs, KindSelection) {
  AmrGraph g = talk_negated();
  EXPECT_TRUE(motif_set(g, {}, MotifKinds::none()).empty());
  EXPECT_EQ(strings(motif_set(parse_penman("(p / person)"), {})), std::set<std::string>{"I(person)"});
  EXPECT_EQ(motif_set(g, {}, MotifKinds::parse("a")).size(), 3u);
  EXPECT_EQ(motif_set(g, {}, MotifKinds::parse("i")).size(), 4u);
  // Without attribute motifs, instances and relations lose their attributes.
  MotifSet ir = motif_set(g, talk_to_speak(), MotifKinds::parse("i,r"));
  EXPECT_TRUE(ir.contains("I(speak)"));
  EXPECT_TRUE(ir.contains("R(I(person),name,I(name))"));
  EXPECT_EQ(ir.size(), 4u + 4u);
}

TEST(Motifs, KindParsing) {
  EXPECT_EQ(MotifKinds::parse("a,i,r"), MotifKinds::all());
  EXPECT_EQ(MotifKinds::parse("relation,instance"), (MotifKinds{false, true, true}));
  EXPECT_EQ(MotifKinds::parse(""), MotifKinds::none());
  EXPECT_THROW(MotifKinds::parse("a,x"), std::invalid_argument);
  EXPECT_EQ(MotifKinds::parse(MotifKinds{true, false, true}.to_string()), (MotifKinds{true, false, true}));
}

TEST(Motifs, PropBankPattern) {
  EXPECT_TRUE(is_propbank_frame("talk-01"));
  EXPECT_TRUE(is_propbank_frame("have-org-role-91"));
  EXPECT_FALSE(is_propbank_frame("person"));
  EXPECT_FALSE(is_propbank_frame("date-entity"));
  EXPECT_FALSE(is_propbank_frame("-01"));
}

TEST(Motifs, EntityConceptsAreNeverMapped) {
  FrameMap frames;
  frames.insert("person", "human");
  frames.insert("talk-01", "speak");
  EXPECT_TRUE(motif_set(talk_negated(), frames).contains("I(person)"));
}

TEST(Motifs, CanonicalStringsEscape) {
  AttributeMotif a{"op1", Constant::string("a,b)")};
  EXPECT_EQ(canonical_string(a), "A(op1,s:a\\,b\\))");
  AttributeMotif b{"op1", Constant::symbol("a,b)")};
  EXPECT_NE(canonical_string(a), canonical_string(b));
}

TEST(FrameMap, LoadsTsv) {
  testing::TempDir dir("frames");
  testing::write_file(dir.path() / "f.tsv", "# header\ntalk-01\tspeak\n\nsay-01\tspeak\n");
  FrameMap m = load_frame_map(dir.path() / "f.tsv");
  EXPECT_EQ(m.lookup("talk-01"), "speak");
  EXPECT_EQ(m.lookup("apple"), "apple");
  EXPECT_EQ(m.size(), 2u);

  testing::write_file(dir.path() / "empty.tsv", "");
  EXPECT_TRUE(load_frame_map(dir.path() / "empty.tsv").empty());

  std::vector<std::string> warnings;
  EXPECT_TRUE(load_frame_map(dir.path() / "absent.tsv", warnings).empty());
  EXPECT_EQ(warnings.size(), 1u);

  testing::write_file(dir.path() / "bad.tsv", "talk-01\tspeak\nbroken\n");
  try {
    load_frame_map(dir.path() / "bad.tsv");
    FAIL();
  } catch (const FrameMapError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LabelSet, TalkHasThirteenLabels) {
  FeatureSet s = label_set(talk_negated());
  EXPECT_EQ(s.size(), 13u);
  EXPECT_TRUE(s.contains("c:name"));
  EXPECT_TRUE(s.contains("r:name"));
  EXPECT_EQ(label_set(parse_penman("(p / person)")).size(), 1u);
  EXPECT_EQ(label_set(parse_penman("(a / x :r (b / y :s (c / z)))")),
            label_set(parse_penman("(a / x :s (b / y :r (c / z)))")));
}

// Property tests over random small graphs.
class MotifProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MotifProperties, MatchesNaiveEnumeration) {
  Rng rng(GetParam());
  std::map<std::string, std::string> raw{{"go-01", "move"}, {"see-01", "perceive"}};
  FrameMap frames;
  for (const auto& [k, v] : raw) frames.insert(k, v);
  for (int i = 0; i < 25; ++i) {
    testing::RandomGraphOptions opts;
    opts.awkward_constants = true;
    AmrGraph g = testing::random_graph(rng, opts);
    EXPECT_EQ(strings(motif_set(g, frames)), testing::naive_motifs(g, raw));
    EXPECT_EQ(strings(motif_set(g, frames, MotifKinds::parse("i,r"))), testing::naive_motifs(g, raw, false, true, true));
    EXPECT_EQ(strings(motif_set(g, frames, MotifKinds::parse("a,r"))), testing::naive_motifs(g, raw, true, false, true));
    EXPECT_EQ(strings(motif_set(g, frames, MotifKinds::parse("a,i"))), testing::naive_motifs(g, raw, true, true, false));
  }
}

TEST_P(MotifProperties, NestingAndBound) {
  Rng rng(GetParam() + 1000);
  for (int i = 0; i < 25; ++i) {
    AmrGraph g = testing::random_graph(rng);
    MotifSet all = motif_set(g, {});
    std::size_t bound = g.attributes().size();
    for (NodeIndex n = 0; n < g.node_count(); ++n) {
      auto attrs = strings(attribute_motifs(g, n));
      for (const auto& m : instance_motifs(g, n, {}))
        if (m.attribute) {
          EXPECT_TRUE(attrs.contains(canonical_string(*m.attribute)));
        }
      bound += std::max<std::size_t>(1, g.attributes_of(n).size());
    }
    for (std::size_t r = 0; r < g.relations().size(); ++r) {
      const Relation& rel = g.relations()[r];
      auto src = strings(instance_motifs(g, rel.source, {}));
      auto tgt = strings(instance_motifs(g, rel.target, {}));
      for (const auto& m : relation_motifs(g, r, {})) {
        EXPECT_TRUE(src.contains(canonical_string(m.source)));
        EXPECT_TRUE(tgt.contains(canonical_string(m.target)));
      }
      bound += std::max<std::size_t>(1, g.attributes_of(rel.source).size()) *
               std::max<std::size_t>(1, g.attributes_of(rel.target).size());
    }
    EXPECT_LE(all.size(), bound);
  }
}

TEST_P(MotifProperties, UnusedFrameEntriesChangeNothing) {
  Rng rng(GetParam() + 2000);
  FrameMap extra;
  extra.insert("absent-01", "nothing");
  extra.insert("other-02", "else");
  for (int i = 0; i < 25; ++i) {
    AmrGraph g = testing::random_graph(rng);
    EXPECT_EQ(motif_set(g, {}), motif_set(g, extra));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MotifProperties, ::testing::Values(1, 2, 3, 4));

TEST(Motifs, CanonicalStringsAreInjective) {
  // Structurally distinct motifs built from awkward pieces never collide.
  std::vector<std::string> pieces = {"a", "a,", "(a", "a)", "a\\", ",", "I(a)", "A(a,y:b)"};
  std::set<InstanceMotif> motifs;
  for (const auto& c : pieces) {
    motifs.insert({c, std::nullopt});
    for (const auto& l : pieces)
      for (const auto& v : pieces)
        for (auto kind : {ConstantKind::String, ConstantKind::Symbol})
          motifs.insert({c, AttributeMotif{l, Constant{kind, v}}});
  }
  std::set<std::string> rendered;
  for (const auto& m : motifs) rendered.insert(canonical_string(m));
  EXPECT_EQ(rendered.size(), motifs.size());
}

}  // namespace
}  // namespace rematch
