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

#include "rematch/corpus.hpp"
#include "rematch/graph_equal.hpp"
#include "test_support.hpp"

namespace rematch {
namespace {

TEST(Corpus, ReadsBlocksWithMetadata) {
  const char* text =
      "# ::id first ::date 2020\n# ::snt He did not cut the apple.\n"
      "(c / cut-01 :polarity - :ARG0 (h / he))\n\n\n"
      "# ::id second\n(a / amr-empty)\n";
  LoadResult r = read_corpus(text);
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].id, "first");
  EXPECT_EQ(r.entries[0].snt, "He did not cut the apple.");
  EXPECT_EQ(r.entries[0].metadata.size(), 2u);
  EXPECT_EQ(r.entries[1].id, "second");
  EXPECT_FALSE(r.entries[1].snt.has_value());
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Corpus, SynthesizesMissingIds) {
  LoadResult r = read_corpus("(a / x)\n\n# ::id named\n(b / y)\n\n(c / z)\n");
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[0].id, "doc-0");
  EXPECT_EQ(r.entries[1].id, "named");
  EXPECT_EQ(r.entries[2].id, "doc-2");
}

TEST(Corpus, EmptyFileWarns) {
  LoadResult r = read_corpus("");
  EXPECT_TRUE(r.entries.empty());
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_TRUE(read_corpus("# just a header\n\n").entries.empty());
}

TEST(Corpus, ErrorPolicies) {
  const char* text = "(a / x)\n\n(b / y\n\n(c / z)\n";
  try {
    read_corpus(text);
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.block(), 1u);
  }
  LoadResult r = read_corpus(text, {.policy = ErrorPolicy::SkipAndWarn, .parse = {}});
  EXPECT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_THROW(read_corpus("# ::id x\n(a / b)\n\n# ::id x\n(c / d)\n"), CorpusError);
}

TEST(Corpus, MetadataValue) {
  EXPECT_EQ(metadata_value("# ::id abc ::date 2020", "id"), "abc");
  EXPECT_EQ(metadata_value("# ::id abc ::date 2020", "date"), "2020");
  EXPECT_FALSE(metadata_value("# ::id abc", "snt").has_value());
}

TEST(Corpus, FormatEntryRoundTrips) {
  LoadResult r = read_corpus("# ::id k ::extra stuff\n# ::snt Hi.\n(a / b :ARG0 (c / d))\n");
  std::string text = format_entry(r.entries[0]);
  LoadResult again = read_corpus(text);
  ASSERT_EQ(again.entries.size(), 1u);
  EXPECT_EQ(again.entries[0].metadata, r.entries[0].metadata);
  EXPECT_TRUE(graph_equal(again.entries[0].graph, r.entries[0].graph));
}

TEST(Corpus, LoadFromDisk) {
  testing::TempDir dir("corpus");
  testing::write_file(dir.path() / "c.amr", "(a / x)\n\n(b / y)\n");
  EXPECT_EQ(load_corpus(dir.path() / "c.amr").entries.size(), 2u);
  EXPECT_ANY_THROW(load_corpus(dir.path() / "missing.amr"));
}

}  // namespace
}  // namespace rematch
