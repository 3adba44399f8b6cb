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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rematch/amr_graph.hpp"
#include "rematch/penman.hpp"

namespace rematch {

struct CorpusEntry {
  std::string id;
  std::optional<std::string> snt;
  // Every `#` line of the block, verbatim, including the ::id / ::snt ones.
  std::vector<std::string> metadata;
  AmrGraph graph;
};

enum class ErrorPolicy : std::uint8_t { FailFast, SkipAndWarn };

struct LoadOptions {
  ErrorPolicy policy = ErrorPolicy::FailFast;
  ParseOptions parse;
};

struct LoadResult {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> warnings;
};

/// Thrown under FailFast. `block()` is the 0-based block index in the file.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t block, const std::string& what)
      : std::runtime_error("block " + std::to_string(block) + ": " + what), block_(block) {}
  std::size_t block() const noexcept { return block_; }

 private:
  std::size_t block_;
};

/// Splits on blank lines; a block holding only comments is skipped. Missing
/// `# ::id` yields `doc-N` with N the block index. Duplicate ids are errors.
LoadResult read_corpus(std::string_view text, const LoadOptions& options = {});
LoadResult load_corpus(const std::filesystem::path& path, const LoadOptions& options = {});

/// Value of `::key` on a metadata line such as `# ::id x ::date y`.
std::optional<std::string> metadata_value(std::string_view line, std::string_view key);

/// Metadata lines followed by the Penman graph and a trailing blank line.
std::string format_entry(const CorpusEntry& entry, PenmanLayout layout = PenmanLayout::Indented);

}  // namespace rematch
