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

#include "rematch/penman.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <regex>
#include <set>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace rematch {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnbalancedParens: return "UnbalancedParens";
    case ParseErrorKind::DuplicateVariableDefinition: return "DuplicateVariableDefinition";
    case ParseErrorKind::UndefinedVariableReference: return "UndefinedVariableReference";
    case ParseErrorKind::EmptyGraph: return "EmptyGraph";
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::CyclicGraph: return "CyclicGraph";
    case ParseErrorKind::MultiEdge: return "MultiEdge";
    case ParseErrorKind::DuplicateAttribute: return "DuplicateAttribute";
  }
  return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " at " + std::to_string(line) + ":" +
                         std::to_string(column) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(detail) {}

bool is_inverted_role(std::string_view role) {
  if (!role.empty() && role.front() == ':') role.remove_prefix(1);
  static constexpr std::array<std::string_view, 3> kNonInverse = {"consist-of", "prep-out-of",
                                                                  "prep-on-behalf-of"};
  if (role.size() <= 3 || !role.ends_with("-of")) return false;
  return std::find(kNonInverse.begin(), kNonInverse.end(), role) == kNonInverse.end();
}

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class TokenType { LParen, RParen, Slash, Role, String, Symbol, End };

struct Token {
  TokenType type;
  std::string text;
  Position pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_blank();
      Position start = pos_;
      if (at_end()) {
        tokens.push_back({TokenType::End, "", start});
        return tokens;
      }
      char c = peek();
      if (c == '(') {
        advance();
        tokens.push_back({TokenType::LParen, "(", start});
      } else if (c == ')') {
        advance();
        tokens.push_back({TokenType::RParen, ")", start});
      } else if (c == '/') {
        advance();
        tokens.push_back({TokenType::Slash, "/", start});
      } else if (c == '"') {
        tokens.push_back({TokenType::String, read_string(), start});
      } else if (c == ':') {
        advance();
        tokens.push_back({TokenType::Role, read_bare(), start});
      } else if (c == '~') {
        // surface alignment, e.g. `~e.12`; not interpreted
        advance();
        read_bare();
      } else {
        tokens.push_back({TokenType::Symbol, read_bare(), start});
      }
    }
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return text_[i_]; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '/' ||
           c == ':' || c == '"' || c == '~';
  }

  std::string read_bare() {
    std::string out;
    while (!at_end() && !is_delimiter(peek())) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  std::string read_string() {
    Position start = pos_;
    advance();  // opening quote
    std::string out;
    while (!at_end()) {
      char c = peek();
      if (c == '\\') {
        advance();
        if (at_end()) break;
        out.push_back(peek());
        advance();
      } else if (c == '"') {
        advance();
        return out;
      } else {
        out.push_back(c);
        advance();
      }
    }
    throw ParseError(ParseErrorKind::UnexpectedToken, start.line, start.column,
                     "unterminated string");
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
};

struct Atom {
  bool quoted = false;
  std::string text;
};

struct RawEdge {
  std::string role;
  Position pos;
  std::variant<std::size_t, Atom> target;  // raw node index or atom
};

struct RawNode {
  std::string variable;
  std::optional<std::string> label;
  Position pos;
  std::vector<RawEdge> edges;
};

class TreeParser {
 public:
  explicit TreeParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<RawNode> run() {
    const Token& first = peek();
    if (first.type == TokenType::End)
      throw ParseError(ParseErrorKind::EmptyGraph, first.pos.line, first.pos.column,
                       "no graph in input");
    if (first.type == TokenType::RParen)
      throw ParseError(ParseErrorKind::UnbalancedParens, first.pos.line, first.pos.column,
                       "unexpected ')'");
    if (first.type != TokenType::LParen) unexpected(first, "expected '('");
    parse_node();
    const Token& rest = peek();
    if (rest.type == TokenType::RParen)
      throw ParseError(ParseErrorKind::UnbalancedParens, rest.pos.line, rest.pos.column,
                       "unexpected ')'");
    if (rest.type != TokenType::End) unexpected(rest, "trailing content after graph");
    return std::move(nodes_);
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  const Token& next() { return tokens_[i_ < tokens_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] static void unexpected(const Token& t, const std::string& what) {
    if (t.type == TokenType::End)
      throw ParseError(ParseErrorKind::UnbalancedParens, t.pos.line, t.pos.column,
                       "input ended before ')'");
    throw ParseError(ParseErrorKind::UnexpectedToken, t.pos.line, t.pos.column,
                     what + ", found '" + t.text + "'");
  }

  std::size_t parse_node() {
    const Token& open = next();
    std::size_t index = nodes_.size();
    nodes_.push_back({});
    nodes_[index].pos = open.pos;

    const Token& var = next();
    if (var.type != TokenType::Symbol || var.text.empty()) unexpected(var, "expected variable");
    nodes_[index].variable = var.text;

    if (peek().type == TokenType::Slash) {
      next();
      const Token& label = next();
      if (label.type != TokenType::Symbol && label.type != TokenType::String)
        unexpected(label, "expected concept after '/'");
      nodes_[index].label = label.text;
    }

    while (peek().type == TokenType::Role) {
      const Token& role = next();
      RawEdge edge{role.text, role.pos, Atom{}};
      const Token& t = peek();
      if (t.type == TokenType::LParen) {
        edge.target = parse_node();
      } else if (t.type == TokenType::Symbol) {
        edge.target = Atom{false, next().text};
      } else if (t.type == TokenType::String) {
        edge.target = Atom{true, next().text};
      } else {
        unexpected(t, "expected role target");
      }
      nodes_[index].edges.push_back(std::move(edge));
    }

    const Token& close = next();
    if (close.type != TokenType::RParen) unexpected(close, "expected ')' or role");
    return index;
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
  std::vector<RawNode> nodes_;
};

bool looks_numeric(const std::string& s) {
  static const std::regex kNumber(R"([+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)");
  return std::regex_match(s, kNumber);
}

ParseErrorKind parse_kind_for(GraphViolation v) {
  switch (v) {
    case GraphViolation::Cycle:
    case GraphViolation::SelfLoop: return ParseErrorKind::CyclicGraph;
    case GraphViolation::MultiEdge: return ParseErrorKind::MultiEdge;
    case GraphViolation::DuplicateAttribute: return ParseErrorKind::DuplicateAttribute;
    case GraphViolation::DuplicateVariable: return ParseErrorKind::DuplicateVariableDefinition;
    default: return ParseErrorKind::EmptyGraph;
  }
}

}  // namespace

AmrGraph parse_penman(std::string_view text, const ParseOptions& options) {
  std::vector<RawNode> raw = TreeParser(Lexer(text).run()).run();

  std::vector<Instance> instances;
  std::unordered_map<std::string, NodeIndex> by_variable;
  for (const auto& node : raw) {
    if (!node.label) continue;
    if (by_variable.contains(node.variable))
      throw ParseError(ParseErrorKind::DuplicateVariableDefinition, node.pos.line, node.pos.column,
                       "variable '" + node.variable + "' defined twice");
    by_variable.emplace(node.variable, instances.size());
    instances.push_back({node.variable, *node.label});
  }

  auto resolve = [&](const RawNode& node) {
    auto it = by_variable.find(node.variable);
    if (it == by_variable.end())
      throw ParseError(ParseErrorKind::UndefinedVariableReference, node.pos.line, node.pos.column,
                       "variable '" + node.variable + "' is never defined");
    return it->second;
  };

  std::vector<Relation> relations;
  std::vector<Attribute> attributes;
  std::vector<Position> relation_pos;
  std::vector<Position> attribute_pos;
  for (const auto& node : raw) {
    NodeIndex source = resolve(node);
    for (const auto& edge : node.edges) {
      std::optional<NodeIndex> target;
      if (const auto* child = std::get_if<std::size_t>(&edge.target)) {
        target = resolve(raw[*child]);
      } else {
        const Atom& atom = std::get<Atom>(edge.target);
        if (!atom.quoted) {
          if (auto it = by_variable.find(atom.text); it != by_variable.end()) target = it->second;
        }
        if (!target) {
          Constant value = atom.quoted              ? Constant::string(atom.text)
                           : looks_numeric(atom.text) ? Constant::number(atom.text)
                                                      : Constant::symbol(atom.text);
          attributes.push_back({source, edge.role, std::move(value)});
          attribute_pos.push_back(edge.pos);
          continue;
        }
      }
      if (options.normalize_inverse_roles && is_inverted_role(edge.role)) {
        relations.push_back({*target, edge.role.substr(0, edge.role.size() - 3), source});
      } else {
        relations.push_back({source, edge.role, *target});
      }
      relation_pos.push_back(edge.pos);
    }
  }

  NodeIndex root = resolve(raw.front());
  if (auto violation = find_violation(root, instances, relations, attributes)) {
    Position where = raw.front().pos;
    if (*violation == GraphViolation::MultiEdge || *violation == GraphViolation::SelfLoop) {
      std::set<std::pair<NodeIndex, NodeIndex>> seen;
      for (std::size_t i = 0; i < relations.size(); ++i) {
        const auto& r = relations[i];
        if (r.source == r.target || !seen.emplace(r.source, r.target).second) {
          where = relation_pos[i];
          break;
        }
      }
    } else if (*violation == GraphViolation::DuplicateAttribute) {
      std::set<std::tuple<NodeIndex, std::string, Constant>> seen;
      for (std::size_t i = 0; i < attributes.size(); ++i) {
        const auto& a = attributes[i];
        if (!seen.emplace(a.source, a.label, a.value).second) {
          where = attribute_pos[i];
          break;
        }
      }
    }
    throw ParseError(parse_kind_for(*violation), where.line, where.column,
                     std::string(to_string(*violation)));
  }
  return AmrGraph(root, std::move(instances), std::move(relations), std::move(attributes));
}

namespace {

std::string render_constant(const Constant& c) {
  if (c.kind != ConstantKind::String) return c.lexical;
  std::string out = "\"";
  for (char ch : c.lexical) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

struct Child {
  std::string role;
  std::string label;     // target concept, or rendered constant
  std::string variable;  // empty for constants
  std::optional<std::size_t> relation;
  std::optional<NodeIndex> node;
};

class Writer {
 public:
  Writer(const AmrGraph& g, PenmanLayout layout)
      : g_(g), layout_(layout), visited_(g.node_count(), false),
        emitted_(g.relations().size(), false) {}

  std::string run() {
    write_node(g_.root(), 0);
    return std::move(out_);
  }

 private:
  void write_node(NodeIndex n, std::size_t depth) {
    visited_[n] = true;
    out_ += "(" + g_.variable_of(n) + " / " + g_.concept_of(n);

    std::vector<Child> children;
    for (std::size_t r : g_.outgoing(n)) {
      if (emitted_[r]) continue;
      const Relation& rel = g_.relations()[r];
      children.push_back({rel.role, g_.concept_of(rel.target), g_.variable_of(rel.target), r,
                          rel.target});
    }
    for (std::size_t r : g_.incoming(n)) {
      if (emitted_[r]) continue;
      const Relation& rel = g_.relations()[r];
      children.push_back({rel.role + "-of", g_.concept_of(rel.source), g_.variable_of(rel.source),
                          r, rel.source});
    }
    for (std::size_t a : g_.attributes_of(n)) {
      const Attribute& attr = g_.attributes()[a];
      children.push_back({attr.label, render_constant(attr.value), "", std::nullopt, std::nullopt});
    }
    std::sort(children.begin(), children.end(), [](const Child& x, const Child& y) {
      return std::tie(x.role, x.label, x.variable) < std::tie(y.role, y.label, y.variable);
    });
    for (const auto& c : children)
      if (c.relation) emitted_[*c.relation] = true;

    for (const auto& c : children) {
      if (layout_ == PenmanLayout::Indented) {
        out_ += "\n";
        out_.append(4 * (depth + 1), ' ');
      } else {
        out_ += " ";
      }
      out_ += ":" + c.role + " ";
      if (!c.node) {
        out_ += c.label;
      } else if (visited_[*c.node]) {
        out_ += c.variable;
      } else {
        write_node(*c.node, depth + 1);
      }
    }
    out_ += ")";
  }

  const AmrGraph& g_;
  PenmanLayout layout_;
  std::vector<bool> visited_;
  std::vector<bool> emitted_;
  std::string out_;
};

}  // namespace

std::string serialize_penman(const AmrGraph& g, PenmanLayout layout) {
  return Writer(g, layout).run();
}

}  // namespace rematch
