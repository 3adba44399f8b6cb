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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rematch/amr_graph.hpp"

namespace rematch {

enum class ParseErrorKind : std::uint8_t {
  UnbalancedParens,
  DuplicateVariableDefinition,
  UndefinedVariableReference,
  EmptyGraph,
  UnexpectedToken,
  CyclicGraph,
  MultiEdge,
  DuplicateAttribute,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

struct ParseOptions {
  // Rewrite `:X-of` edges to `:X` with source and target swapped.
  bool normalize_inverse_roles = true;
};

/// True for roles written in inverted form (`ARG0-of`), excluding the
/// conventional roles that merely end in `-of` (`consist-of`, `prep-out-of`,
/// `prep-on-behalf-of`). Accepts the role with or without the leading colon.
bool is_inverted_role(std::string_view role);

/// Parses one Penman expression. Lines starting with `#` are comments.
/// A bare symbol target names a variable when that variable is defined
/// anywhere in the expression; otherwise it is a constant.
AmrGraph parse_penman(std::string_view text, const ParseOptions& options = {});

enum class PenmanLayout : std::uint8_t { Indented, SingleLine };

/// Deterministic Penman rendering: a depth-first spanning tree from the root
/// with children ordered by (role, target label, target variable). Incoming
/// relations needed to reach a node are written as `:role-of`, so the output
/// reparses (with inverse-role normalization on) to an equal graph.
std::string serialize_penman(const AmrGraph& g, PenmanLayout layout = PenmanLayout::Indented);

}  // namespace rematch
