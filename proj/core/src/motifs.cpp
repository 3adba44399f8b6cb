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

#include "rematch/motifs.hpp"

#include <algorithm>
#include <fstream>

namespace rematch {
namespace {

void append_escaped(std::string& out, std::string_view text) {
  for (char c : text) {
    if (c == '\\' || c == '(' || c == ')' || c == ',') out.push_back('\\');
    out.push_back(c);
  }
}

char constant_tag(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::String: return 's';
    case ConstantKind::Symbol: return 'y';
    case ConstantKind::Number: return 'n';
  }
  return '?';
}

void append_constant(std::string& out, const Constant& c) {
  out.push_back(constant_tag(c.kind));
  out.push_back(':');
  append_escaped(out, c.lexical);
}

std::string attribute_string(std::string_view label, const Constant& value) {
  std::string out = "A(";
  append_escaped(out, label);
  out.push_back(',');
  append_constant(out, value);
  out.push_back(')');
  return out;
}

std::string instance_string(std::string_view concept_label, const std::string* attribute) {
  std::string out = "I(";
  append_escaped(out, concept_label);
  if (attribute) {
    out.push_back(',');
    out += *attribute;
  }
  out.push_back(')');
  return out;
}

std::string relation_string(const std::string& source, std::string_view role,
                            const std::string& target) {
  std::string out = "R(";
  out += source;
  out.push_back(',');
  append_escaped(out, role);
  out.push_back(',');
  out += target;
  out.push_back(')');
  return out;
}

void check_node(const AmrGraph& g, NodeIndex node) {
  if (node >= g.node_count())
    throw MotifError("unknown node index " + std::to_string(node));
}

const std::string& generalize(const std::string& concept_label, const FrameMap& frames) {
  return is_propbank_frame(concept_label) ? frames.lookup(concept_label) : concept_label;
}

}  // namespace

std::string canonical_string(const AttributeMotif& m) { return attribute_string(m.label, m.value); }

std::string canonical_string(const InstanceMotif& m) {
  if (!m.attribute) return instance_string(m.concept_label, nullptr);
  std::string attr = canonical_string(*m.attribute);
  return instance_string(m.concept_label, &attr);
}

std::string canonical_string(const RelationMotif& m) {
  return relation_string(canonical_string(m.source), m.role, canonical_string(m.target));
}

std::string canonical_string(const Motif& m) {
  return std::visit([](const auto& x) { return canonical_string(x); }, m);
}

MotifKinds MotifKinds::parse(std::string_view text) {
  MotifKinds kinds = none();
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    if (item == "a" || item == "attribute") {
      kinds.attribute = true;
    } else if (item == "i" || item == "instance") {
      kinds.instance = true;
    } else if (item == "r" || item == "relation") {
      kinds.relation = true;
    } else if (!item.empty()) {
      throw std::invalid_argument("unknown motif kind '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return kinds;
}

std::string MotifKinds::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(attribute, "a");
  add(instance, "i");
  add(relation, "r");
  return out;
}

FeatureSet::FeatureSet(std::vector<std::string> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool FeatureSet::insert(std::string item) {
  auto it = std::lower_bound(items_.begin(), items_.end(), item);
  if (it != items_.end() && *it == item) return false;
  items_.insert(it, std::move(item));
  return true;
}

bool FeatureSet::contains(std::string_view item) const {
  return std::binary_search(items_.begin(), items_.end(), item, std::less<>{});
}

std::size_t intersection_size(const FeatureSet& a, const FeatureSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    int c = i->compare(*j);
    if (c == 0) {
      ++count;
      ++i;
      ++j;
    } else if (c < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

void FrameMap::insert(std::string frame, std::string generalized) {
  entries_.insert_or_assign(std::move(frame), std::move(generalized));
}

const std::string& FrameMap::lookup(const std::string& frame) const {
  auto it = entries_.find(frame);
  return it == entries_.end() ? frame : it->second;
}

FrameMap load_frame_map(const std::filesystem::path& path, std::vector<std::string>& warnings) {
  FrameMap map;
  std::ifstream in(path);
  if (!in) {
    warnings.push_back("frame map '" + path.string() + "' not found; using identity mapping");
    return map;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw FrameMapError(line_no, "expected two tab-separated columns");
    std::string frame = line.substr(0, tab);
    std::string generalized = line.substr(tab + 1);
    if (frame.empty() || generalized.empty()) throw FrameMapError(line_no, "empty column");
    map.insert(std::move(frame), std::move(generalized));
  }
  return map;
}

FrameMap load_frame_map(const std::filesystem::path& path) {
  std::vector<std::string> ignored;
  return load_frame_map(path, ignored);
}

bool is_propbank_frame(std::string_view concept_label) {
  if (concept_label.size() < 4) return false;
  std::size_t n = concept_label.size();
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  return concept_label[n - 3] == '-' && digit(concept_label[n - 2]) && digit(concept_label[n - 1]) &&
         concept_label[0] != '-';
}

std::vector<AttributeMotif> attribute_motifs(const AmrGraph& g, NodeIndex node) {
  check_node(g, node);
  std::vector<AttributeMotif> out;
  for (std::size_t i : g.attributes_of(node)) {
    const Attribute& a = g.attributes()[i];
    out.push_back({a.label, a.value});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<InstanceMotif> instance_motifs(const AmrGraph& g, NodeIndex node, const FrameMap& frames,
                                           bool with_attributes) {
  check_node(g, node);
  const std::string& label = generalize(g.concept_of(node), frames);
  std::vector<InstanceMotif> out;
  if (with_attributes) {
    for (auto& a : attribute_motifs(g, node)) out.push_back({label, std::move(a)});
  }
  if (out.empty()) out.push_back({label, std::nullopt});
  return out;
}

std::vector<RelationMotif> relation_motifs(const AmrGraph& g, std::size_t relation,
                                           const FrameMap& frames, bool with_attributes) {
  if (relation >= g.relations().size())
    throw MotifError("unknown relation index " + std::to_string(relation));
  const Relation& r = g.relations()[relation];
  std::vector<RelationMotif> out;
  auto sources = instance_motifs(g, r.source, frames, with_attributes);
  auto targets = instance_motifs(g, r.target, frames, with_attributes);
  for (const auto& s : sources)
    for (const auto& t : targets) out.push_back({s, r.role, t});
  return out;
}

MotifSet motif_set(const AmrGraph& g, const FrameMap& frames, MotifKinds enabled) {
  std::vector<std::string> out;
  if (enabled.empty()) return MotifSet{};

  const std::size_t n = g.node_count();
  std::vector<std::vector<std::string>> node_attributes(n);
  if (enabled.attribute) {
    for (const Attribute& a : g.attributes())
      node_attributes[a.source].push_back(attribute_string(a.label, a.value));
  }

  std::vector<std::vector<std::string>> node_instances(n);
  for (NodeIndex i = 0; i < n; ++i) {
    const std::string& label = generalize(g.concept_of(i), frames);
    if (node_attributes[i].empty()) {
      node_instances[i].push_back(instance_string(label, nullptr));
    } else {
      for (const auto& a : node_attributes[i]) node_instances[i].push_back(instance_string(label, &a));
    }
  }

  if (enabled.attribute)
    for (auto& attrs : node_attributes)
      for (auto& a : attrs) out.push_back(std::move(a));
  if (enabled.instance)
    for (const auto& inst : node_instances) out.insert(out.end(), inst.begin(), inst.end());
  if (enabled.relation) {
    for (const Relation& r : g.relations())
      for (const auto& s : node_instances[r.source])
        for (const auto& t : node_instances[r.target]) out.push_back(relation_string(s, r.role, t));
  }
  return MotifSet(std::move(out));
}

FeatureSet label_set(const AmrGraph& g) {
  std::vector<std::string> out;
  out.reserve(g.node_count() + g.relations().size() + 2 * g.attributes().size());
  for (const auto& inst : g.instances()) out.push_back("c:" + inst.label);
  for (const auto& r : g.relations()) out.push_back("r:" + r.role);
  for (const auto& a : g.attributes()) {
    out.push_back("a:" + a.label);
    std::string c;
    append_constant(c, a.value);
    out.push_back(std::move(c));
  }
  return FeatureSet(std::move(out));
}

}  // namespace rematch
