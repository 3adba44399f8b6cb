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

#include "rematch/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace rematch {

std::optional<std::string> metadata_value(std::string_view line, std::string_view key) {
  const std::string marker = "::" + std::string(key);
  std::size_t pos = 0;
  while ((pos = line.find(marker, pos)) != std::string_view::npos) {
    std::size_t end = pos + marker.size();
    if (end == line.size() || line[end] == ' ' || line[end] == '\t') break;
    pos = end;
  }
  if (pos == std::string_view::npos) return std::nullopt;
  std::size_t start = pos + marker.size();
  std::size_t stop = line.find(" ::", start);
  std::string_view value = line.substr(start, stop == std::string_view::npos ? line.npos : stop - start);
  while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) value.remove_prefix(1);
  while (!value.empty() && (value.back() == ' ' || value.back() == '\t' || value.back() == '\r'))
    value.remove_suffix(1);
  return std::string(value);
}

namespace {

struct Block {
  std::size_t first_line = 1;
  std::vector<std::string> lines;
};

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<Block> split_blocks(std::string_view text) {
  std::vector<Block> blocks;
  Block current;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (is_blank(line)) {
      if (!current.lines.empty()) blocks.push_back(std::move(current));
      current = Block{};
    } else {
      if (current.lines.empty()) current.first_line = line_no;
      current.lines.emplace_back(line);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!current.lines.empty()) blocks.push_back(std::move(current));
  return blocks;
}

}  // namespace

LoadResult read_corpus(std::string_view text, const LoadOptions& options) {
  LoadResult result;
  std::unordered_set<std::string> ids;
  std::size_t block_index = 0;

  for (Block& block : split_blocks(text)) {
    std::vector<std::string> metadata;
    std::string body;
    for (auto& line : block.lines) {
      std::string_view trimmed = line;
      trimmed.remove_prefix(std::min(trimmed.find_first_not_of(" \t"), trimmed.size()));
      if (trimmed.starts_with("#")) metadata.push_back(line);
      body += line;
      body += '\n';
    }
    if (metadata.size() == block.lines.size()) continue;  // comment-only block

    const std::size_t index = block_index++;
    auto fail = [&](const std::string& what) {
      if (options.policy == ErrorPolicy::FailFast) throw CorpusError(index, what);
      result.warnings.push_back("block " + std::to_string(index) + " skipped: " + what);
    };

    std::optional<std::string> id;
    std::optional<std::string> snt;
    for (const auto& m : metadata) {
      if (!id) id = metadata_value(m, "id");
      if (!snt) snt = metadata_value(m, "snt");
    }
    std::string entry_id = id && !id->empty() ? *id : "doc-" + std::to_string(index);

    try {
      AmrGraph graph = parse_penman(body, options.parse);
      if (!ids.insert(entry_id).second) {
        fail("duplicate id '" + entry_id + "'");
        continue;
      }
      result.entries.push_back({std::move(entry_id), std::move(snt), std::move(metadata),
                                std::move(graph)});
    } catch (const ParseError& e) {
      fail(std::string(to_string(e.kind())) + " at line " +
           std::to_string(block.first_line + e.line() - 1) + ", column " +
           std::to_string(e.column()) + (e.detail().empty() ? "" : ": " + e.detail()));
    }
  }

  if (block_index == 0) result.warnings.push_back("corpus contains no graphs");
  return result;
}

LoadResult load_corpus(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_corpus(buffer.str(), options);
}

std::string format_entry(const CorpusEntry& entry, PenmanLayout layout) {
  std::string out;
  bool has_id = false;
  for (const auto& m : entry.metadata) {
    if (metadata_value(m, "id")) has_id = true;
  }
  if (!has_id) out += "# ::id " + entry.id + "\n";
  for (const auto& m : entry.metadata) out += m + "\n";
  out += serialize_penman(entry.graph, layout);
  out += "\n\n";
  return out;
}

}  // namespace rematch
